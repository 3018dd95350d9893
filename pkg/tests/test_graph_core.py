from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs
from metrigraph import (
    BadEdgeId,
    BadIndex,
    BadParams,
    ContractionSeq,
    DisconnectedGraph,
    NonPositiveLength,
    SelfLoopContraction,
    beta,
    build,
    circle,
    contract_edge,
    delete_edge_interior,
    make_family,
    path,
    star,
)


def test_single_edge_graph():
    g = build(2, [(0, 1, 1)])
    assert g.v == 2 and g.e == 1 and g.total_length == 1


def test_unit_c4_total_length():
    g = build(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert g.total_length == 4
    assert g.valences == (2, 2, 2, 2)


def test_disconnected_rejected_and_names_components():
    with pytest.raises(DisconnectedGraph) as info:
        build(3, [(0, 1, 1)])
    assert info.value.components == [["0", "1"], ["2"]]
    assert "{2}" in str(info.value)


@pytest.mark.parametrize("length", [0, -1, "0/3", "-2/5"])
def test_nonpositive_length(length):
    with pytest.raises(NonPositiveLength):
        build(2, [(0, 1, length)])


@pytest.mark.parametrize("edges", [[(0, 2, 1)], [(0, -1, 1)], [(0, 1)]])
def test_bad_index(edges):
    with pytest.raises(BadIndex):
        build(2, edges)


def test_lengths_accept_strings_and_decimals():
    g = build(2, [(0, 1, "3/4"), (0, 1, "0.25"), (1, 1, 2)])
    assert [e.length for e in g.edges] == [Fraction(3, 4), Fraction(1, 4), Fraction(2)]


def test_loop_counts_twice_in_valence():
    g = build(2, [(0, 1, 1), (1, 1, 1)])
    assert g.valences == (1, 3)


def test_bridges():
    g = build(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 3, 1)])
    assert g.bridges == frozenset({3})
    with pytest.raises(BadEdgeId):
        g.is_bridge(9)


def test_contract_middle_of_p4():
    h, vmap = contract_edge(path(4), 1)
    assert h.v == 3 and [e.length for e in h.edges] == [1, 1]
    assert h.is_tree and h.canonical()[1] == path(3).canonical()[1]
    assert tuple(vmap) == (0, 1, 1, 2)


def test_contract_c4_gives_c3():
    for i in range(4):
        h, _ = contract_edge(circle(4), i)
        assert h.v == 3 and h.e == 3 and h.valences == (2, 2, 2)
        assert all(not e.is_loop for e in h.edges)


def test_contract_parallel_pair_gives_loop():
    g = build(2, [(0, 1, 2), (0, 1, 5)])
    h, vmap = contract_edge(g, 0)
    assert h.v == 1 and len(h.edges) == 1
    assert h.edges[0].is_loop and h.edges[0].length == 5
    assert tuple(vmap) == (0, 0)


def test_merged_vertex_keeps_smaller_index_and_label():
    g = build(["a", "b", "c"], [(0, 2, 1), (2, 1, 1)])
    h, vmap = contract_edge(g, 0)
    assert h.labels == ("a", "b") and tuple(vmap) == (0, 1, 0)


def test_contract_errors():
    g = build(2, [(0, 1, 1), (1, 1, 1)])
    with pytest.raises(SelfLoopContraction):
        contract_edge(g, 1)
    with pytest.raises(BadEdgeId):
        contract_edge(g, 2)


def test_contraction_seq_admissibility():
    seq = ContractionSeq((0, 0))
    h, vmap = seq.apply(circle(4))
    assert h.v == 2 and seq.is_admissible(circle(4))
    # C3 -> contract twice leaves a loop, which cannot be contracted
    assert not ContractionSeq((0, 0, 0)).is_admissible(circle(3))


def test_delete_edge_interior_examples():
    comps = delete_edge_interior(circle(4), 0)
    assert len(comps) == 1 and comps[0].graph.is_tree and comps[0].graph.v == 4
    comps = delete_edge_interior(path(4), 1)
    assert [c.vertices for c in comps] == [(0, 1), (2, 3)]
    g = build(2, [(0, 1, 1), (0, 0, 3)])
    assert len(delete_edge_interior(g, 1)) == 1


def test_families_vertex_counts():
    s4 = star(4)
    assert sorted(s4.valences) == [1, 1, 1, 3]
    assert beta("beta1", [1, 1]).v == 4
    assert beta("beta5", [0, 0, 0, 0, 0]).v == 5
    expected = {"beta1": 2, "beta2": 3, "beta3": 4, "beta4": 4, "beta5": 5, "beta6": 6}
    for name, extra in expected.items():
        arity = {"beta1": 2, "beta2": 2, "beta3": 3, "beta4": 4, "beta5": 5, "beta6": 6}[name]
        params = list(range(1, arity + 1))
        t = beta(name, params)
        assert t.is_tree and t.v == sum(params) + extra


def test_family_dispatch_and_errors():
    assert make_family("circle", [5]).e == 5
    assert make_family("path", [3], [2, 3]).total_length == 5
    assert circle(1).edges[0].is_loop
    with pytest.raises(BadParams):
        make_family("beta3", [1, 2])
    with pytest.raises(BadParams):
        make_family("beta1", [-1, 0])
    with pytest.raises(BadParams):
        make_family("wheel", [4])
    with pytest.raises(BadParams):
        path(3, [1])


@given(multigraphs(min_v=2, max_v=7), st.data())
def test_admissible_sequence_drops_vertices(g, data):
    h, k = g, 0
    total = g.total_length
    while h.v > 1:
        choices = [i for i, e in enumerate(h.edges) if not e.is_loop]
        i = data.draw(st.sampled_from(choices))
        total -= h.edges[i].length
        h, vmap = contract_edge(h, i)
        k += 1
        assert h.v == g.v - k
        assert h.total_length == total
        assert sorted(set(vmap)) == list(range(h.v))


@given(multigraphs(min_v=2, max_v=8, trees_only=True))
def test_tree_edge_deletion_splits_in_two(t):
    for i in range(t.e):
        comps = delete_edge_interior(t, i)
        assert len(comps) == 2
        assert sum(len(c.vertices) for c in comps) == t.v
