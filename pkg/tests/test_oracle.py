from __future__ import annotations

import json

import pytest

from conftest import chains
from rectiplanar.errors import CapExceeded
from rectiplanar.generators import gen_chain, gen_cycle, gen_random_ipsp
from rectiplanar.graph import Graph
from rectiplanar.oracle import (
    component_graph,
    oracle_spirality_set,
    oracle_test,
    rotation_systems,
    transport_feasible,
)
from rectiplanar.spirality import from_values

DIGON = Graph.from_edges(2, [(0, 1), (0, 1)])


@pytest.mark.parametrize("g,expected", [(gen_cycle(3), False), (gen_cycle(4), True), (DIGON, False)])
def test_oracle_small_cases(g, expected):
    assert oracle_test(g).feasible is expected


def test_oracle_cycles():
    assert [oracle_test(gen_cycle(n)).feasible for n in range(3, 9)] == [False] + [True] * 5


def test_oracle_theta_and_long_theta():
    assert not oracle_test(chains(2, 2, 2)).feasible
    assert oracle_test(chains(3, 3, 3)).feasible


def test_oracle_cap():
    with pytest.raises(CapExceeded):
        oracle_test(gen_cycle(20))
    assert oracle_test(gen_cycle(20), cap=20).feasible


def test_oracle_result_dict():
    data = oracle_test(gen_cycle(4)).to_dict()
    assert json.loads(json.dumps(data)) == {"feasible": True, "embeddings_tried": 1}


def test_chain_component():
    assert oracle_spirality_set(gen_chain(3), 0, 3) == {-2, -1, 0, 1, 2}


def test_digon_component():
    assert oracle_spirality_set(DIGON, 0, 1) == set()


def test_theta_component():
    # frozen from the oracle; equals the empty three-way bundle of [0,1]^1 chains
    assert oracle_spirality_set(chains(2, 2, 2), 0, 1) == set()


def test_two_chain_components():
    assert oracle_spirality_set(chains(3, 3), 0, 1) == {-2, -1, 0, 1, 2}
    assert oracle_spirality_set(chains(2, 2), 0, 1) == {-1, 0, 1}


def test_component_cap():
    with pytest.raises(CapExceeded):
        oracle_spirality_set(gen_chain(20), 0, 20)


def test_rotation_systems_halved_by_mirror():
    # theta: two degree-3 vertices with 2 cyclic orders each, halved by reflection
    assert sum(1 for _ in rotation_systems(chains(2, 2, 2))) == 2
    assert sum(1 for _ in rotation_systems(gen_cycle(5))) == 1


def test_transport_feasible():
    arcs = {"a": {0, 1}, "b": {1}}
    assert transport_feasible({"a": 2, "b": 1}, {0: 1, 1: 2}, arcs)
    assert not transport_feasible({"a": 2, "b": 1}, {0: 0, 1: 3}, {"a": {0}, "b": {1}})
    assert not transport_feasible({"a": 1}, {0: 2}, {"a": {0}})


def test_component_graph_labels():
    g = chains(2, 3)
    comp, label = component_graph(g, [2, 3, 4])
    assert comp.m == 3
    assert sorted(label) == sorted({w for e in (2, 3, 4) for w in g.edges[e]})


@pytest.mark.parametrize("seed", range(12))
def test_oracle_sets_have_rectilinear_shapes(seed):
    g = gen_random_ipsp(5, 700 + seed)
    for e in range(g.m):
        a, b = g.edges[e]
        rest = [f for f in range(g.m) if f != e]
        comp, label = component_graph(g, rest)
        found = oracle_spirality_set(comp, label[a], label[b])
        assert found == {-x for x in found}
        from_values(x for x in found if x >= 0)
