from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import chains
from rectiplanar.errors import GraphFormatError, InputError
from rectiplanar.generators import gen_cycle, gen_random_ipsp
from rectiplanar.graph import Graph, classify, is_biconnected, is_connected, is_simple_cycle, parse_graph


def test_parse_text_cycle():
    g = parse_graph(b"4 4\n0 1\n1 2\n2 3\n3 0")
    assert g.n == 4
    assert g.edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert all(g.degree(v) == 2 for v in range(4))


def test_parse_json_keeps_multi_edges():
    g = parse_graph(b'{"n":2,"edges":[[0,1],[0,1]]}')
    assert g.n == 2 and g.m == 2
    assert g.adjacency[0] == (0, 1)


def test_parse_round_trips():
    g = gen_random_ipsp(12, 3)
    assert parse_graph(g.to_text()) == g
    assert parse_graph(g.to_json().encode()) == g


def test_parse_trailing_newline_optional():
    assert parse_graph("3 3\n0 1\n1 2\n2 0\n") == parse_graph("3 3\n0 1\n1 2\n2 0")


@pytest.mark.parametrize(
    "text,line",
    [
        ("2 1\n0 2", 2),
        ("3 2\n0 1\n1 1", 3),
        ("3\n0 1", 1),
        ("a b\n0 1", 1),
        ("3 2\n0 1\n1 x", 3),
        ("3 3\n0 1\n1 2", 3),
        ("", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)
    assert isinstance(info.value, InputError)


def test_parse_out_of_range_message():
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_graph("2 1\n0 2")


@pytest.mark.parametrize("text", ['{"n": 2}', '{"n": 2, "edges": [[0, 5]]}', '{"n": -1, "edges": []}', "[1, 2"])
def test_parse_json_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_from_edges_rejects_self_loop():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


def test_classify_cycle(c4):
    cls = classify(c4)
    assert (cls.is_degree4, cls.is_biconnected, cls.is_simple_cycle, cls.is_sp, cls.is_independent_parallel) == (
        True,
        True,
        True,
        True,
        True,
    )


def test_classify_theta(theta):
    cls = classify(theta)
    assert not cls.is_simple_cycle
    assert cls.is_sp and cls.is_independent_parallel


def test_classify_shared_pole():
    # two diamonds a-b and b-c, closed into a cycle by a chain c-a
    edges = [(0, 3), (3, 1), (0, 4), (4, 1), (1, 5), (5, 2), (1, 6), (6, 2), (2, 7), (7, 0)]
    cls = classify(Graph.from_edges(8, edges))
    assert cls.is_sp
    assert not cls.is_independent_parallel


def test_classify_k4_not_sp():
    k4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    cls = classify(k4)
    assert cls.is_biconnected and not cls.is_sp and not cls.is_independent_parallel


def test_classify_degree_five():
    g = chains(1, 2, 2, 2, 2)
    assert not classify(g).is_degree4


def test_classify_path_not_biconnected():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    cls = classify(g)
    assert not cls.is_biconnected and not cls.is_sp


def test_simple_cycle_iff_all_degree_two_and_connected():
    assert is_simple_cycle(gen_cycle(7))
    two = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_connected(two)
    assert not is_simple_cycle(two)


@pytest.mark.parametrize("seed", range(200))
def test_random_outputs_classify_all_true(seed):
    g = gen_random_ipsp(6 + seed % 40, seed)
    cls = classify(g)
    assert cls.is_degree4 and cls.is_biconnected and cls.is_sp and cls.is_independent_parallel


@st.composite
def simple_graphs(draw):
    n = draw(st.integers(3, 8))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.from_edges(n, chosen)


@settings(max_examples=300, deadline=None)
@given(simple_graphs())
def test_connectivity_agrees_with_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    assert is_connected(g) == nx.is_connected(ref)
    assert is_biconnected(g) == nx.is_biconnected(ref)
