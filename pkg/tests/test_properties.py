import itertools
import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from seidel_energy.energy import holder_lower_bound, total_energy, vertex_energies
from seidel_energy.graph import Graph, complement, seidel_switch
from seidel_energy.graph_io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from seidel_energy.spectral import abs_matrix, diag_power, eigen_decompose, seidel_matrix


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def graph_and_subset(draw):
    g = draw(graphs())
    x = draw(st.sets(st.integers(0, g.n - 1)))
    return g, x


@given(graph_and_subset())
def test_switch_is_involution(gx):
    g, x = gx
    assert seidel_switch(seidel_switch(g, x), x) == g


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_io_round_trips(g):
    assert parse_edge_list(write_edge_list(g)) == g
    assert parse_graph6(write_graph6(g)) == g


@given(graphs())
def test_s2_diagonal_is_exact(g):
    s = seidel_matrix(g)
    assert all(diag_power(s, i, 2) == g.n - 1 for i in range(g.n))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_energy_bounds_and_partition(g):
    s = seidel_matrix(g)
    d = eigen_decompose(s)
    e = vertex_energies(d)
    n = g.n
    assert abs(e.sum() - total_energy(d)) <= n * 1e-10
    assert np.all(e <= math.sqrt(n - 1) + 1e-9)
    if n >= 2:
        assert all(e[i] >= holder_lower_bound(s, i) - 1e-9 for i in range(n))
    assert total_energy(d) >= 2 * n - 2 - 1e-8


@settings(max_examples=60, deadline=None)
@given(graph_and_subset())
def test_switching_and_complement_preserve_vertex_energy(gx):
    g, x = gx
    e = vertex_energies(eigen_decompose(seidel_matrix(g)))
    ex = vertex_energies(eigen_decompose(seidel_matrix(seidel_switch(g, x))))
    ec = vertex_energies(eigen_decompose(seidel_matrix(complement(g))))
    np.testing.assert_allclose(ex, e, atol=1e-9)
    np.testing.assert_allclose(ec, e, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(graph_and_subset())
def test_switching_conjugates_abs_matrix(gx):
    g, x = gx
    dsign = np.array([-1.0 if v in x else 1.0 for v in range(g.n)])
    m = abs_matrix(eigen_decompose(seidel_matrix(g)))
    mx = abs_matrix(eigen_decompose(seidel_matrix(seidel_switch(g, x))))
    np.testing.assert_allclose(mx, dsign[:, None] * m * dsign[None, :], atol=1e-9)
