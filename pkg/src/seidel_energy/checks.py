"""Named invariant checks run by ``seidel-energy check``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coulson import AGREEMENT_TOL, QuadratureConfig, coulson_energies
from .energy import (
    TWO_ABS,
    abs_value_clusters,
    constancy_diagnostic,
    holder_lower_bound,
    is_scalar_square,
    total_energy,
    two_abs_value_energy,
    upper_bound,
    vertex_energies,
)
from .graph import Graph, complement, seidel_switch
from .spectral import abs_matrix, eigen_decompose, seidel_matrix

DEFAULT_SEED = 0x5E1DE1
BOUND_TOL = 1e-9
EQUALITY_TOL = 1e-8
INVARIANCE_TOL = 1e-9
N_RANDOM_SUBSETS = 5


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def switching_subsets(n: int, seed: int = DEFAULT_SEED, count: int = N_RANDOM_SUBSETS) -> list[list[int]]:
    """Empty set, full vertex set, then ``count`` seeded random subsets."""
    rng = np.random.default_rng(seed)
    subsets = [[], list(range(n))]
    for _ in range(count):
        subsets.append(np.flatnonzero(rng.random(n) < 0.5).tolist())
    return subsets


def _worst(values, bound_fn):
    """First violating ``(index, value)``, or None if all hold."""
    bad = [(i, v) for i, v in enumerate(values) if not bound_fn(i, v)]
    return bad[0] if bad else None


def run_checks(
    g: Graph,
    seed: int = DEFAULT_SEED,
    cfg: QuadratureConfig | None = None,
    coulson: bool = True,
) -> list[CheckResult]:
    s = seidel_matrix(g)
    n = g.n
    d = eigen_decompose(s)
    e = vertex_energies(d)
    out = []

    def add(name, ok, detail):
        out.append(CheckResult(name, bool(ok), detail))

    resid = float(np.abs(s @ d.vectors - d.vectors * d.eigenvalues).max()) if n else 0.0
    orth = float(np.abs(d.vectors.T @ d.vectors - np.eye(n)).max()) if n else 0.0
    add("eigen_residual", resid <= d.tol and orth <= d.tol,
        f"max|SW-W diag(theta)|={resid:.2e}, max|W^T W-I|={orth:.2e}, tol={d.tol:.2e}")
    tr, tr2 = float(d.eigenvalues.sum()), float((d.eigenvalues ** 2).sum())
    add("trace", abs(tr) <= d.tol * n and abs(tr2 - n * (n - 1)) <= d.tol * n * n,
        f"sum theta={tr:.2e}, sum theta^2 - n(n-1)={tr2 - n * (n - 1):.2e}")

    total = total_energy(d)
    gap = abs(float(e.sum()) - total)
    add("partition", gap <= n * 1e-10, f"|sum_i E(v_i) - sum_j |theta_j||={gap:.2e}")

    m = abs_matrix(d)
    dgap = float(np.abs(np.diag(m) - e).max()) if n else 0.0
    sqgap = float(np.abs(m @ m - s @ s).max()) if n else 0.0
    add("abs_matrix", dgap <= 10 * d.tol and sqgap <= 10 * n * d.tol,
        f"diag gap={dgap:.2e}, max||S|^2 - S^2|={sqgap:.2e}")

    ub = upper_bound(n)
    bad = _worst(e, lambda i, v: v <= ub + BOUND_TOL)
    add("upper_bound", bad is None,
        f"all E(v_i) <= sqrt(n-1)={ub:.6f}" if bad is None else f"vertex {bad[0]}: {bad[1]:.12f} > {ub:.12f}")

    alpha = is_scalar_square(s)
    exact = alpha is not None and alpha == n - 1
    numeric = bool(np.all(np.abs(e - ub) <= EQUALITY_TOL))
    add("upper_equality_iff", exact == numeric,
        f"S^2=(n-1)I: {exact}, all vertices at sqrt(n-1): {numeric}")

    if n >= 2:
        lower = [holder_lower_bound(s, i) for i in range(n)]
        bad = _worst(e, lambda i, v: v >= lower[i] - BOUND_TOL)
        add("holder_lower_bound", bad is None,
            "all E(v_i) >= (n-1)^1.5/sqrt([S^4]_ii)" if bad is None
            else f"vertex {bad[0]}: {bad[1]:.12f} < {lower[bad[0]]:.12f}")

    add("haemers", total >= 2 * n - 2 - 1e-8, f"E_S(G)={total:.10f}, 2n-2={2 * n - 2}")

    c = constancy_diagnostic(s, d)
    if c.tag == TWO_ABS:
        a, b = c.params
        target = two_abs_value_energy(a, b, n)
        dev = float(np.abs(e - target).max())
        add("two_abs_consistency", dev <= 1e-8, f"a={a:.10f}, b={b:.10f}, max dev={dev:.2e}")
    spread = float(e.max() - e.min()) if n else 0.0
    add("constancy", True, f"{c.tag} {list(c.params)}; energy spread {spread:.3e}"
        + (f"; {len(abs_value_clusters(d.eigenvalues))} distinct |theta|" if n else ""))

    for x in switching_subsets(n, seed):
        ex = vertex_energies(eigen_decompose(seidel_matrix(seidel_switch(g, x))))
        dev = float(np.abs(ex - e).max()) if n else 0.0
        add(f"switching[{','.join(map(str, x))}]", dev <= INVARIANCE_TOL, f"max dev={dev:.2e}")

    dc = eigen_decompose(seidel_matrix(complement(g)))
    dev = float(np.abs(vertex_energies(dc) - e).max()) if n else 0.0
    spec_dev = float(np.abs(dc.eigenvalues + d.eigenvalues[::-1]).max()) if n else 0.0
    add("complement", dev <= INVARIANCE_TOL and spec_dev <= max(d.tol, dc.tol),
        f"energy max dev={dev:.2e}, spectrum negation dev={spec_dev:.2e}")

    if coulson:
        res = coulson_energies(s, cfg=cfg, reference=e)
        worst = max(res, key=lambda r: r.agreement) if res else None
        if worst is not None:
            ok = all(r.agreement <= AGREEMENT_TOL for r in res)
            detail = f"worst vertex {worst.vertex}: |coulson - spectral|={worst.agreement:.2e}, nodes={worst.nodes_used}"
            if worst.warning:
                detail += f"; warning: {worst.warning}"
            add("coulson_agreement", ok, detail)
    return out


def all_passed(results) -> bool:
    return all(r.passed for r in results)

