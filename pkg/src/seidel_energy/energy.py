"""Vertex and total Seidel energies, closed forms, bounds and constancy detection."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameterError
from .graph import Graph
from .spectral import (
    EigenDecomposition,
    diag_power,
    eigen_decompose,
    seidel_matrix,
    zero_snapped_abs,
)

CLUSTER_RTOL = 1e-7
ATTAIN_TOL = 1e-9

S2_SCALAR = "S2_scalar"
TWO_ABS = "two_abs"
NONE_DETECTED = "none_detected"


def vertex_energy(d: EigenDecomposition, i: int) -> float:
    """|S|_ii = sum_j w_ij^2 |theta_j|."""
    if not 0 <= i < d.n:
        raise IndexError(f"vertex {i} out of range for n={d.n}")
    w = d.vectors[i]
    return float(np.sum(w * w * np.abs(d.eigenvalues)))


def vertex_energies(d: EigenDecomposition) -> np.ndarray:
    return d.weights @ np.abs(d.eigenvalues)


def total_energy(d: EigenDecomposition) -> float:
    return float(np.sum(np.abs(d.eigenvalues)))


def two_abs_value_energy(a: float, b: float, n: int) -> float:
    """Common vertex energy when every |theta| is either ``a`` or ``b``."""
    if not a > b >= 0:
        raise InvalidParameterError(f"need a > b >= 0, got a={a}, b={b}")
    return b + (a - b) * (n - 1 - b * b) / (a * a - b * b)


def closed_form(family: str, *params) -> float:
    """Per-vertex energy of ``complete(n)``, ``complete_bipartite(r, s)`` or ``conference(v)``."""
    if family == "complete":
        (n,) = params
        if n < 3:
            raise InvalidParameterError("closed form for K_n needs n >= 3")
        return 2 * (n - 1) / n
    if family == "complete_bipartite":
        r, s = params
        if r < 1 or s < 1:
            raise InvalidParameterError("K_{r,s} needs r, s >= 1")
        return 2 * (r + s - 1) / (r + s)
    if family == "conference":
        (v,) = params
        if v < 5 or v % 4 != 1:
            raise InvalidParameterError(f"conference order must be 1 mod 4 and >= 5, got {v}")
        return (v - 1) / math.sqrt(v)
    raise InvalidParameterError(f"unknown family {family!r}")


def upper_bound(n: int) -> float:
    return math.sqrt(n - 1)


def is_scalar_square(s) -> int | None:
    """Return alpha if S^2 = alpha I exactly (integer arithmetic), else None."""
    s = np.asarray(s, dtype=np.int64)
    sq = s @ s
    alpha = int(sq[0, 0]) if sq.size else 0
    if np.array_equal(sq, alpha * np.eye(s.shape[0], dtype=np.int64)):
        return alpha
    return None


@dataclass(frozen=True)
class UpperBoundCheck:
    attained: list[bool]
    equality_exact: bool
    equality_numeric: bool

    @property
    def consistent(self) -> bool:
        return self.equality_exact == self.equality_numeric


def upper_bound_check(d: EigenDecomposition, s, tol: float = ATTAIN_TOL) -> UpperBoundCheck:
    """Per-vertex attainment of sqrt(n-1), with the exact S^2 = (n-1)I test as ground truth."""
    n = d.n
    bound = upper_bound(n)
    e = vertex_energies(d)
    attained = [bool(abs(x - bound) <= tol) for x in e]
    alpha = is_scalar_square(s)
    return UpperBoundCheck(attained, alpha is not None and alpha == n - 1, all(attained))


def holder_lower_bound(s, i: int) -> float:
    """(n-1)^{3/2} / sqrt([S^4]_ii), with the denominator in exact integers."""
    n = np.asarray(s).shape[0]
    if n < 2:
        raise InvalidParameterError("the Hoelder bound needs n >= 2")
    return (n - 1) ** 1.5 / math.sqrt(diag_power(s, i, 4))


@dataclass(frozen=True)
class Constancy:
    tag: str
    params: tuple[float, ...] = ()


def abs_value_clusters(eigenvalues, rtol: float = CLUSTER_RTOL) -> list[float]:
    """Distinct absolute eigenvalues, ascending, each as the mean of its cluster."""
    a = np.sort(zero_snapped_abs(eigenvalues))
    if a.size == 0:
        return []
    tol = rtol * a[-1]
    groups = [[a[0]]]
    for x in a[1:]:
        if x - groups[-1][-1] > tol:
            groups.append([x])
        else:
            groups[-1].append(x)
    return [float(np.mean(g)) for g in groups]


def constancy_diagnostic(s, d: EigenDecomposition) -> Constancy:
    """Detect a mechanism forcing constant vertex energy.

    Only sufficient conditions are tested, so ``none_detected`` does not
    mean the energies differ.
    """
    alpha = is_scalar_square(s)
    if alpha is not None and alpha > 0:
        return Constancy(S2_SCALAR, (float(alpha),))
    clusters = abs_value_clusters(d.eigenvalues)
    if len(clusters) == 2:
        b, a = clusters
        return Constancy(TWO_ABS, (a, b))
    return Constancy(NONE_DETECTED)


@dataclass
class EnergyReport:
    n: int
    per_vertex: list[float]
    total: float
    upper_bound: float
    lower_bounds: list[float]
    s2_diag: int
    s4_diag: list[int]
    constancy: Constancy
    eigenvalues: list[float] = field(default_factory=list)
    upper: UpperBoundCheck | None = None

    @property
    def constant(self) -> bool:
        return self.constancy.tag != NONE_DETECTED

    @property
    def two_abs_values(self) -> tuple[float, float] | None:
        if self.constancy.tag == TWO_ABS:
            return self.constancy.params
        return None


def energy_report(g_or_s) -> EnergyReport:
    s = seidel_matrix(g_or_s) if isinstance(g_or_s, Graph) else np.asarray(g_or_s, dtype=np.int64)
    n = s.shape[0]
    d = eigen_decompose(s)
    s4 = [diag_power(s, i, 4) for i in range(n)]
    lower = [holder_lower_bound(s, i) for i in range(n)] if n >= 2 else [0.0] * n
    return EnergyReport(
        n=n,
        per_vertex=vertex_energies(d).tolist(),
        total=total_energy(d),
        upper_bound=upper_bound(n),
        lower_bounds=lower,
        s2_diag=n - 1,
        s4_diag=s4,
        constancy=constancy_diagnostic(s, d),
        eigenvalues=d.eigenvalues.tolist(),
        upper=upper_bound_check(d, s),
    )
