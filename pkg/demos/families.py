"""
Vertex energies of classical families
=====================================

Complete graphs, complete bipartite graphs and Paley graphs all have one
energy shared by every vertex, and it has a closed form.
"""

import numpy as np

from seidel_energy import complete_bipartite, complete_graph, paley_graph
from seidel_energy.energy import closed_form, vertex_energies
from seidel_energy.spectral import eigen_decompose, seidel_matrix

# Every vertex of K_n sees the same spectrum {n-1 (once), -1}.
for n in (3, 5, 10, 20):
    e = vertex_energies(eigen_decompose(seidel_matrix(complete_graph(n))))
    print(f"K_{n:<3d} energies {np.unique(e.round(12))}  closed form {closed_form('complete', n):.12f}")

# K_{r,s} is switching equivalent to K_{r+s}, so the energy depends only on r + s.
for r, s in [(1, 4), (2, 3), (3, 7), (5, 5)]:
    e = vertex_energies(eigen_decompose(seidel_matrix(complete_bipartite(r, s))))
    print(f"K_{r},{s}  max {e.max():.12f}  closed form {closed_form('complete_bipartite', r, s):.12f}")

# Paley graphs give conference-type spectra {0, +sqrt(q), -sqrt(q)}.
for q in (5, 13, 17):
    d = eigen_decompose(seidel_matrix(paley_graph(q)))
    print(f"Paley({q}) spectrum {np.unique(d.eigenvalues.round(9))}")
    print(f"          energy {vertex_energies(d)[0]:.12f}  closed form {closed_form('conference', q):.12f}")
