import itertools
from importlib import resources

import pytest

from seidel_energy.errors import InvalidOrderError, InvalidParameterError, UnsupportedFieldError
from seidel_energy.graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    figure1_order6,
    modified_petersen,
    paley_graph,
    quadratic_residues,
    seidel_switch,
)
from seidel_energy.graph_io import parse_edge_list
from seidel_energy.spectral import seidel_matrix


def test_graph_normalizes_pairs():
    g = Graph(3, frozenset({(2, 0), (1, 2)}))
    assert g.edges == {(0, 2), (1, 2)}


def test_graph_rejects_loops_and_range():
    with pytest.raises(InvalidParameterError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(IndexError):
        Graph(3, frozenset({(0, 3)}))


def test_graph_is_hashable_and_immutable():
    g = complete_graph(3)
    assert {g: 1}[complete_graph(3)] == 1
    with pytest.raises(AttributeError):
        g.n = 4


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_complete_graph_counts(n):
    g = complete_graph(n)
    assert g.num_edges == n * (n - 1) // 2
    assert g.degrees() == [n - 1] * n


def test_complete_graph_small():
    assert complete_graph(1).edges == frozenset()
    assert complete_graph(2).edges == {(0, 1)}


@pytest.mark.parametrize("bad", [0, -1])
def test_complete_graph_invalid_order(bad):
    with pytest.raises(InvalidOrderError):
        complete_graph(bad)


def test_complete_bipartite():
    assert complete_bipartite(1, 1) == complete_graph(2)
    g = complete_bipartite(2, 3)
    assert g.num_edges == 6
    assert g.degrees() == [3, 3, 2, 2, 2]
    assert complete_bipartite(3, 3).num_edges == 9
    for i, j in g.edges:
        assert i < 2 <= j
    with pytest.raises(InvalidOrderError):
        complete_bipartite(0, 3)
    with pytest.raises(InvalidOrderError):
        complete_bipartite(2, 0)


def test_paley_5_is_the_pentagon():
    assert quadratic_residues(5) == {1, 4}
    assert paley_graph(5) == cycle_graph(5)


@pytest.mark.parametrize("q", [5, 13, 17, 29, 37])
def test_paley_regular_with_residue_neighbourhood(q):
    g = paley_graph(q)
    assert g.degrees() == [(q - 1) // 2] * q
    squares = {x for x in range(1, q) if any((y * y - x) % q == 0 for y in range(1, q))}
    assert g.neighbors(0) == squares


def test_paley_13_is_strongly_regular_conference():
    g = paley_graph(13)
    adj = g.adjacency()
    common = adj @ adj
    for i, j in itertools.combinations(range(13), 2):
        assert common[i, j] == (2 if adj[i, j] else 3)  # (v-5)/4, (v-1)/4


def test_paley_errors():
    with pytest.raises(InvalidParameterError):
        paley_graph(7)
    with pytest.raises(UnsupportedFieldError):
        paley_graph(9)
    with pytest.raises(UnsupportedFieldError):
        paley_graph(1)


def test_figure1_fixture():
    g = figure1_order6()
    assert g.n == 6 and g.num_edges == 5
    assert g.degrees() == [2, 2, 2, 2, 2, 0]
    s = seidel_matrix(g)
    assert ((s @ s) == [[5 if i == j else 0 for j in range(6)] for i in range(6)]).all()


def test_modified_petersen_fixture():
    g = modified_petersen()
    assert g.n == 10 and g.num_edges == 15
    assert g.degrees() == [3] * 10
    assert g.is_connected()


def test_packaged_fixture_files_match_generators():
    data = resources.files("seidel_energy") / "data"
    assert parse_edge_list((data / "fig1_order6.edges").read_text()) == figure1_order6()
    assert parse_edge_list((data / "fig1_k2.edges").read_text()) == complete_graph(2)
    assert parse_edge_list((data / "modified_petersen.edges").read_text()) == modified_petersen()


def test_complement():
    assert complement(complete_graph(6)) == empty_graph(6)
    c5 = cycle_graph(5)
    doubled = Graph(5, frozenset(((2 * i) % 5, (2 * j) % 5) for i, j in c5.edges))
    assert complement(c5) == doubled
    g = modified_petersen()
    assert complement(complement(g)) == g


def test_switch_trivial_sets():
    g = modified_petersen()
    assert seidel_switch(g, []) == g
    assert seidel_switch(g, range(g.n)) == g


def test_switch_k3():
    assert seidel_switch(complete_graph(3), {0}).edges == {(1, 2)}


def test_switch_rejects_out_of_range():
    with pytest.raises(IndexError):
        seidel_switch(complete_graph(3), {3})


def test_switch_is_conjugation_by_signs():
    g = modified_petersen()
    x = {0, 3, 7}
    d = [-1 if v in x else 1 for v in range(g.n)]
    s = seidel_matrix(g)
    sx = seidel_matrix(seidel_switch(g, x))
    for i in range(g.n):
        for j in range(g.n):
            assert sx[i, j] == d[i] * s[i, j] * d[j]


def test_disjoint_union():
    g = disjoint_union(complete_graph(2), complete_graph(3))
    assert g.n == 5
    assert g.edges == {(0, 1), (2, 3), (2, 4), (3, 4)}
    assert not g.is_connected()
