"""Seidel matrix, dense symmetric eigensolver, |S| and characteristic polynomials.

The eigensolver is a cyclic Jacobi method. Each sweep visits every pair
``(p, q)`` once, using a round-robin ordering that groups the pairs into
rounds of disjoint rotations; a round is then applied as a single
vectorised orthogonal similarity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InvalidParameterError
from .graph import Graph

EIG_RTOL = 1e-12
MAX_SWEEPS = 30
POLY_TOL = 1e-10
ZERO_RTOL = 1e-9


def seidel_matrix(g: Graph) -> np.ndarray:
    """S = J - I - 2A as an int64 array."""
    n = g.n
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - 2 * g.adjacency()


def is_seidel_matrix(s) -> bool:
    s = np.asarray(s)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        return False
    off = ~np.eye(s.shape[0], dtype=bool)
    return bool(np.all(np.diag(s) == 0) and np.all(np.abs(s[off]) == 1) and np.array_equal(s, s.T))


@dataclass(frozen=True)
class EigenDecomposition:
    """``matrix = vectors @ diag(eigenvalues) @ vectors.T`` with ascending eigenvalues.

    ``vectors[:, j]`` is the unit eigenvector for ``eigenvalues[j]``; row ``i``
    holds the weights of vertex ``i`` across the eigenbasis.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    tol: float
    sweeps: int = 0

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def weights(self) -> np.ndarray:
        """Squared eigenvector entries, ``weights[i, j] = w_ij**2``; rows sum to 1."""
        return self.vectors ** 2


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Partition all pairs of ``range(n)`` into rounds of disjoint pairs."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p, q = [], []
        for k in range(m // 2):
            a, b = players[k], players[m - 1 - k]
            if a < n and b < n:
                p.append(min(a, b))
                q.append(max(a, b))
        rounds.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(matrix, rtol: float = EIG_RTOL, max_sweeps: int = MAX_SWEEPS):
    """Eigen-decompose a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm is at most
    ``rtol * ||matrix||_F``. Returns ``(eigenvalues, vectors, tol, sweeps)``
    with eigenvalues in ascending order.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise InvalidParameterError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0.0, atol=0.0):
        raise InvalidParameterError("matrix must be symmetric")
    v = np.eye(n)
    tol = rtol * float(np.linalg.norm(a))
    rounds = _round_robin(n)
    sweeps = 0
    off = _off_norm(a)
    while off > tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", off)
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            # a subnormal apq sends tau to inf, giving t = 0: the identity rotation
            with np.errstate(over="ignore"):
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            ap, aq = a[:, p], a[:, q]
            a[:, p], a[:, q] = c * ap - s * aq, s * ap + c * aq
            ap, aq = a[p, :], a[q, :]
            cr, sr = c[:, None], s[:, None]
            a[p, :], a[q, :] = cr * ap - sr * aq, sr * ap + cr * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p], v[:, q]
            v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq
        sweeps += 1
        off = _off_norm(a)
    theta = np.diag(a).copy()
    order = np.argsort(theta, kind="stable")
    return theta[order], v[:, order], tol, sweeps


def eigen_decompose(s, rtol: float = EIG_RTOL, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    theta, w, tol, sweeps = jacobi_eigh(s, rtol, max_sweeps)
    theta.setflags(write=False)
    w.setflags(write=False)
    return EigenDecomposition(theta, w, tol, sweeps)


def abs_matrix(d: EigenDecomposition) -> np.ndarray:
    """|S| = W diag(|theta|) W^T."""
    w = d.vectors
    return (w * np.abs(d.eigenvalues)) @ w.T


def diag_power(s, i: int, k: int) -> int:
    """Exact integer ``[S^k]_ii`` for ``k`` in {2, 4}."""
    s = np.asarray(s, dtype=np.int64)
    n = s.shape[0]
    if not 0 <= i < n:
        raise IndexError(f"vertex {i} out of range for n={n}")
    if k == 2:
        row = s[i]
    elif k == 4:
        row = s[i] @ s
    else:
        raise InvalidParameterError(f"diag_power supports k in (2, 4), got {k}")
    return int(row @ row)


def _as_complex(z) -> complex:
    if isinstance(z, tuple):
        return complex(*z)
    return complex(z)


def _det_shifted(s: np.ndarray, z: complex) -> complex:
    n = s.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    sign, logabs = np.linalg.slogdet(z * np.eye(n) - s)
    if sign == 0:
        return 0j
    return complex(sign * np.exp(logabs))


def char_poly_at(s, z) -> complex:
    """det(zI - S), via LU with partial pivoting."""
    return _det_shifted(np.asarray(s, dtype=complex), _as_complex(z))


def principal_submatrix(s, i: int) -> np.ndarray:
    s = np.asarray(s)
    if not 0 <= i < s.shape[0]:
        raise IndexError(f"vertex {i} out of range for n={s.shape[0]}")
    keep = np.arange(s.shape[0]) != i
    return s[np.ix_(keep, keep)]


def char_poly_minor_at(s, i: int, z) -> complex:
    """det(zI - S^(i)) where S^(i) drops row and column ``i``."""
    return _det_shifted(np.asarray(principal_submatrix(s, i), dtype=complex), _as_complex(z))


def shifted_logdets(s, z: np.ndarray, vertices=None):
    """Batched ``slogdet(z_k I - S)`` and ``slogdet(z_k I - S^(i))`` over nodes ``z``.

    Returns ``(sign, logabs, sign_minor, logabs_minor)``; the minor arrays have
    shape ``(len(vertices), len(z))``.
    """
    s = np.asarray(s, dtype=float)
    n = s.shape[0]
    z = np.asarray(z, dtype=complex)
    if vertices is None:
        vertices = range(n)
    eye = np.eye(n)
    sign, logabs = np.linalg.slogdet(z[:, None, None] * eye - s)
    sign_m, logabs_m = [], []
    for i in vertices:
        if n == 1:
            sign_m.append(np.ones_like(z))
            logabs_m.append(np.zeros(z.shape))
            continue
        sub = principal_submatrix(s, i)
        sg, la = np.linalg.slogdet(z[:, None, None] * eye[: n - 1, : n - 1] - sub)
        sign_m.append(sg)
        logabs_m.append(la)
    return sign, logabs, np.array(sign_m), np.array(logabs_m)


def zero_snapped_abs(eigenvalues, rtol: float = ZERO_RTOL) -> np.ndarray:
    """|theta| with entries below ``rtol * max|theta|`` set to exactly 0."""
    a = np.abs(np.asarray(eigenvalues, dtype=float))
    if a.size == 0:
        return a
    top = a.max()
    return np.where(a < rtol * top, 0.0, a)
