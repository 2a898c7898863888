import numpy as np

from seidel_energy.graph import Graph, disjoint_union, paley_graph, random_graph

CORPUS_SEED = 20240601
CORPUS_SIZE = 500

ACCEPTANCE_LINES = []


def random_corpus(size=CORPUS_SIZE, seed=CORPUS_SEED, n_min=2, n_max=30):
    """Erdos-Renyi graphs with n uniform in [n_min, n_max] and edge density uniform in [0, 1)."""
    rng = np.random.default_rng(seed)
    graphs = []
    for _ in range(size):
        n = int(rng.integers(n_min, n_max + 1))
        graphs.append(random_graph(n, float(rng.random()), rng))
    return graphs


def conference_graphs():
    """Graphs whose Seidel matrix squares to (n-1)I: Paley graph plus an isolated vertex."""
    return [disjoint_union(paley_graph(q), Graph(1)) for q in (5, 13, 17, 29)]


def record(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok
