"""
Upper and lower bounds on vertex energy
=======================================

Each vertex energy lies between the Hoelder bound (n-1)^{3/2}/sqrt([S^4]_ii)
and sqrt(n-1). The upper bound is met at every vertex exactly when
S^2 = (n-1)I.
"""

import numpy as np

from seidel_energy import Graph, disjoint_union, figure1_order6, modified_petersen, paley_graph, random_graph
from seidel_energy.energy import energy_report

rng = np.random.default_rng(7)
graphs = {
    "C5 + isolated vertex": figure1_order6(),
    "Paley(13) + isolated vertex": disjoint_union(paley_graph(13), Graph(1)),
    "modified Petersen": modified_petersen(),
    "G(12, 0.4)": random_graph(12, 0.4, rng),
}

for name, g in graphs.items():
    r = energy_report(g)
    e = np.array(r.per_vertex)
    lo = np.array(r.lower_bounds)
    print(name)
    print(f"  lower bound range [{lo.min():.6f}, {lo.max():.6f}]")
    print(f"  energy range      [{e.min():.6f}, {e.max():.6f}]")
    print(f"  sqrt(n-1)          {r.upper_bound:.6f}")
    print(f"  S^2 = (n-1)I: {r.upper.equality_exact}, constancy: {r.constancy.tag}")

# The modified Petersen graph is not vertex-constant: two vertices sit at 3.
e = energy_report(modified_petersen()).per_vertex
print("modified Petersen per vertex:", " ".join(f"{x:.4f}" for x in e))
