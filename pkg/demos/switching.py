"""
Switching and complementation
=============================

Seidel switching with respect to a vertex set X conjugates S by a diagonal
sign matrix, and taking the complement negates S. Neither changes |S|, so
vertex energies survive both.
"""

import numpy as np

from seidel_energy import complement, random_graph, seidel_switch
from seidel_energy.energy import vertex_energies
from seidel_energy.spectral import eigen_decompose, seidel_matrix


def energies(g):
    return vertex_energies(eigen_decompose(seidel_matrix(g)))


rng = np.random.default_rng(3)
g = random_graph(9, 0.5, rng)
base = energies(g)
print("edges:", g.num_edges, "energies:", base.round(6))

for x in ([0], [1, 4, 7], list(range(5))):
    h = seidel_switch(g, x)
    print(f"switch {x}: {h.num_edges} edges, max change {np.abs(energies(h) - base).max():.1e}")

h = complement(g)
print(f"complement: {h.num_edges} edges, max change {np.abs(energies(h) - base).max():.1e}")

# The spectra are negatives of each other.
a = eigen_decompose(seidel_matrix(g)).eigenvalues
b = eigen_decompose(seidel_matrix(h)).eigenvalues
print("spectrum of S(G)       :", a.round(4))
print("-spectrum of S(G^c)    :", (-b[::-1]).round(4))
