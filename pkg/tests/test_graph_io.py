import networkx as nx
import numpy as np
import pytest

from seidel_energy.errors import GraphParseError
from seidel_energy.graph import Graph, complete_graph, cycle_graph, modified_petersen, paley_graph, random_graph
from seidel_energy.graph_io import (
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graphs,
    write_edge_list,
    write_graph6,
)


def test_parse_k2():
    assert parse_edge_list("n 2\n0 1") == complete_graph(2)


def test_parse_comments_and_blank_lines():
    text = "# header\n\nn 3\n# inner\n0 2\n  1 2  \n"
    assert parse_edge_list(text).edges == {(0, 2), (1, 2)}


def test_write_is_canonical():
    g = Graph(4, frozenset({(2, 3), (0, 1)}))
    assert write_edge_list(g) == "n 4\n0 1\n2 3\n"
    assert write_edge_list(g, header="a\nb").startswith("# a\n# b\nn 4\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("n 3\n0 1\n0 3\n", 3),
        ("n 3\n0 1\n1 0\n", 3),
        ("n 3\n0 1 2\n", 2),
        ("n 3\n0 x\n", 2),
        ("n 3\n1 1\n", 2),
        ("# c\nm 3\n", 2),
        ("n -2\n", 1),
        ("n two\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_parse_missing_header():
    with pytest.raises(GraphParseError):
        parse_edge_list("# nothing here\n")


def test_graph6_hand_decoded_path():
    # 'C' -> n = 67 - 63 = 4; 'h' -> 104 - 63 = 41 = 0b101001
    # bit order (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) -> edges 01, 12, 23
    g = parse_graph6("Ch")
    assert g.n == 4
    assert g.edges == {(0, 1), (1, 2), (2, 3)}
    assert write_graph6(g) == "Ch"


def test_graph6_k5_with_padding():
    # '~' = 63 = 111111, '{' = 60 = 111100; ten bits used, two padding zeros
    assert parse_graph6("D~{") == complete_graph(5)
    assert parse_graph6(">>graph6<<D~{") == complete_graph(5)


def test_graph6_against_networkx():
    rng = np.random.default_rng(7)
    for n in [1, 2, 3, 7, 12, 40, 63, 70]:
        g = random_graph(n, 0.4, rng)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(g.edges)
        expected = nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert write_graph6(g) == expected
        assert parse_graph6(expected) == g


def test_graph6_errors():
    with pytest.raises(GraphParseError):
        parse_graph6("")
    with pytest.raises(GraphParseError):
        parse_graph6("D~")
    with pytest.raises(GraphParseError):
        parse_graph6("D~{?")
    with pytest.raises(GraphParseError):
        parse_graph6("D\x10{")


@pytest.mark.parametrize("g", [complete_graph(1), cycle_graph(7), paley_graph(13), modified_petersen()])
def test_round_trips(g):
    assert parse_edge_list(write_edge_list(g)) == g
    assert parse_graph6(write_graph6(g)) == g
    assert parse_graph(write_edge_list(g)) == g
    assert parse_graph(write_graph6(g)) == g


def test_write_parse_write_is_identity_on_canonical_text():
    text = write_edge_list(paley_graph(5))
    assert write_edge_list(parse_edge_list(text)) == text


def test_read_graphs(tmp_path):
    p = tmp_path / "a.edges"
    p.write_text("n 2\n0 1\n")
    assert read_graphs(p) == [(str(p), complete_graph(2))]
    q = tmp_path / "many.g6"
    q.write_text(">>graph6<<D~{\n\nCh\n")
    got = read_graphs(q)
    assert [name.rsplit(":", 1)[1] for name, _ in got] == ["1", "3"]
    assert got[0][1] == complete_graph(5)
    bad = tmp_path / "bad.g6"
    bad.write_text("Ch\nD~\n")
    with pytest.raises(GraphParseError) as exc:
        read_graphs(bad)
    assert exc.value.line == 2
