"""
Vertex energy from a contour integral
=====================================

The energy of vertex i equals (1/pi) times the integral over the real line
of 1 - it Phi_i(it)/Phi(it), where Phi is the characteristic polynomial of S
and Phi_i that of S with row and column i removed. Only determinants are
needed, so it is a check on the eigensolver.
"""

from seidel_energy import modified_petersen, paley_graph
from seidel_energy.coulson import QuadratureConfig, coulson_energies, scalar_identity_check, scalar_tail
from seidel_energy.spectral import seidel_matrix

for name, g in [("Paley(13)", paley_graph(13)), ("modified Petersen", modified_petersen())]:
    res = coulson_energies(seidel_matrix(g))
    worst = max(r.agreement for r in res)
    print(f"{name}: {res[0].nodes_used} nodes, worst |integral - spectral| = {worst:.2e}")
    for r in res[:3]:
        print(f"  v{r.vertex}: {r.value:.12f} vs {r.spectral_reference:.12f}")

# A tiny node budget stops the refinement early and says so.
cfg = QuadratureConfig(panels=2, nodes_per_panel=4, budget=24)
coarse = coulson_energies(seidel_matrix(modified_petersen()), [2], cfg)[0]
print(f"coarse grid: {coarse.value:.8f}, estimate {coarse.abs_error_estimate:.1e}, warning: {coarse.warning}")

# A single eigenvalue theta: truncating at +-T loses a predictable tail.
for T in (10.0, 1e3, 1e6):
    got = scalar_identity_check(2.0, T)
    print(f"theta=2, T={T:g}: integral {got:.12f}, 2 - tail {2 - scalar_tail(2.0, T):.12f}")
