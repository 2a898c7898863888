"""Simple undirected graphs, standard families, switching and complementation.

Vertices are the dense integers ``0..n-1``. A :class:`Graph` is immutable;
every operation returns a new graph.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import InvalidOrderError, InvalidParameterError, UnsupportedFieldError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Vertex count plus a set of unordered pairs stored as ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidOrderError(f"vertex count must be a non-negative integer, got {self.n!r}")
        normalized = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise InvalidParameterError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise IndexError(f"edge ({i}, {j}) out of range for n={self.n}")
            normalized.add((i, j) if i < j else (j, i))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        adj = np.asarray(adj)
        n = adj.shape[0]
        if adj.shape != (n, n) or not np.array_equal(adj, adj.T):
            raise InvalidParameterError("adjacency matrix must be square and symmetric")
        if np.any(np.diag(adj)):
            raise InvalidParameterError("adjacency matrix has a nonzero diagonal")
        i, j = np.nonzero(np.triu(adj, 1))
        return cls(n, frozenset(zip(i.tolist(), j.tolist())))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def adjacency(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (int64)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges:
            idx = np.array(self.sorted_edges())
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        return a

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbors(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _check_order(n, name="n"):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidOrderError(f"{name} must be a positive integer, got {n!r}")


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n)


def complete_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s} with parts ``0..r-1`` and ``r..r+s-1``."""
    _check_order(r, "r")
    _check_order(s, "s")
    return Graph(r + s, frozenset((i, j) for i in range(r) for j in range(r, r + s)))


def cycle_graph(n: int) -> Graph:
    _check_order(n)
    if n < 3:
        raise InvalidParameterError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def quadratic_residues(q: int) -> set[int]:
    """Nonzero squares modulo ``q``."""
    return {(x * x) % q for x in range(1, q)}


def paley_graph(q: int) -> Graph:
    """Paley graph over the prime field F_q, q = 1 (mod 4).

    Prime powers are rejected with :class:`UnsupportedFieldError`.
    """
    if not isinstance(q, (int, np.integer)) or not is_prime(q):
        raise UnsupportedFieldError(f"Paley graphs are supported for prime q only, got {q!r}")
    if q % 4 != 1:
        raise InvalidParameterError(f"q must be 1 mod 4 for a symmetric relation, got q={q}")
    squares = quadratic_residues(q)
    return Graph(q, frozenset((x, y) for x in range(q) for y in range(x + 1, q) if (y - x) % q in squares))


def figure1_order6() -> Graph:
    """Order-6 graph whose Seidel matrix satisfies S^2 = 5I.

    Drawn labels v1..v6 map to vertices 0..5; v6 (vertex 5) is isolated.
    Edges: v1v4, v1v5, v2v3, v2v5, v3v4.
    """
    return Graph(6, frozenset({(0, 3), (0, 4), (1, 2), (1, 4), (2, 3)}))


def modified_petersen() -> Graph:
    """Connected 3-regular graph on 10 vertices with non-constant vertex energy.

    Labels v0..v9 map to vertices 0..9 directly. Obtained from the Petersen
    graph by replacing the edges v0v1 and v5v7 with v0v7 and v1v5.
    """
    outer = [(1, 2), (2, 3), (3, 4), (4, 0)]
    inner = [(7, 9), (9, 6), (6, 8), (8, 5)]
    spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    extras = [(0, 7), (1, 5)]
    return Graph(10, frozenset(outer + inner + spokes + extras))


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in itertools.combinations(range(g.n), 2) if e not in g.edges))


def seidel_switch(g: Graph, x: Iterable[int]) -> Graph:
    """Toggle every pair with exactly one endpoint in ``x``."""
    x = set(int(v) for v in x)
    for v in x:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    edges = set(g.edges)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if (i in x) != (j in x):
                edges ^= {(i, j)}
    return Graph(g.n, frozenset(edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((i + g.n, j + g.n) for i, j in h.edges)
    return Graph(g.n + h.n, g.edges | frozenset(shifted))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``."""
    _check_order(n)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return Graph(n, frozenset(zip(iu[keep].tolist(), ju[keep].tolist())))
