from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import lengths, multigraphs
from metrigraph import (
    build,
    circle,
    index_report,
    kirchhoff_index,
    numeric_mode,
    path,
    r_gamma,
    star,
    wiener_index,
    xy_invariants,
)
from metrigraph.invariants import BaseVertexDisagreement, distance_matrix, edge_sums
from oracles import graph_edges, kirchhoff, wiener


def test_c4_kirchhoff_and_wiener():
    assert kirchhoff_index(circle(4)) == 5
    assert wiener_index(circle(4)) == 8


@pytest.mark.parametrize("v", range(3, 13))
def test_cycle_closed_forms(v):
    g = circle(v)
    assert kirchhoff_index(g) == Fraction(v * (v * v - 1), 12)
    assert xy_invariants(g) == (Fraction(v - 1, 2), Fraction(v - 1, 2))
    assert r_gamma(g) == v - 1


def test_single_edge():
    g = build(2, [(0, 1, "3/2")])
    assert kirchhoff_index(g) == wiener_index(g) == Fraction(3, 2)


@given(lengths, lengths, lengths)
def test_p4_and_s4_wiener(a, b, c):
    assert wiener_index(path(4, [a, b, c])) == 3 * (a + b + c) + b
    assert wiener_index(star(4, [a, b, c])) == 3 * (a + b + c)


def test_two_parallel_unit_edges():
    g = build(2, [(0, 1, 1), (0, 1, 1)])
    x, y = xy_invariants(g)
    assert y == kirchhoff_index(g) == Fraction(1, 2)
    assert x == Fraction(1, 2)


def test_r_gamma_examples():
    assert r_gamma(path(6)) == 5
    a, b = Fraction(3), Fraction(5, 2)
    assert r_gamma(build(2, [(0, 1, a), (0, 1, b)])) == 2 * a * b / (a + b)


@given(multigraphs(max_v=6))
def test_against_oracles(g):
    assert kirchhoff_index(g) == kirchhoff(g.v, graph_edges(g))
    assert wiener_index(g) == wiener(g.v, graph_edges(g))


@given(multigraphs(max_v=6))
def test_x_plus_y_is_r_gamma(g):
    x, y = xy_invariants(g)
    assert x + y == r_gamma(g)
    assert x >= 0 and y >= 0


@given(multigraphs(max_v=8, trees_only=True))
def test_tree_values(t):
    assert wiener_index(t) == kirchhoff_index(t)
    assert xy_invariants(t) == (0, t.total_length)


@given(multigraphs(min_v=1, max_v=8, max_extra=3))
def test_xy_independent_of_base_vertex(g):
    first = edge_sums(g, 0)
    for p in range(1, g.v):
        s = edge_sums(g, p)
        assert (s.x, s.y) == (first.x, first.y)


@given(multigraphs(min_v=2, max_v=3, max_extra=5))
def test_kirchhoff_vs_y_for_two_or_three_vertices(g):
    _, y = xy_invariants(g)
    assert kirchhoff_index(g) == (y if g.v == 2 else 2 * y)


def test_distance_uses_shortest_parallel_edge():
    g = build(3, [(0, 1, 5), (0, 1, 2), (1, 2, 1), (0, 2, 4)])
    d = distance_matrix(g)
    assert d[0][1] == 2 and d[0][2] == 3


def test_report_fields():
    rep = index_report(circle(4))
    assert rep.as_dict() == {"v": 4, "e": 4, "total_length": "4", "kirchhoff": "5", "wiener": "8",
                             "x": "3/2", "y": "3/2", "r_gamma": "3"}


@given(multigraphs(min_v=2, max_v=6))
def test_float_report_close(g):
    exact = index_report(g)
    with numeric_mode("float"):
        approx = index_report(g)
    for name in ("kirchhoff", "x", "y", "r_gamma"):
        assert float(getattr(approx, name)) == pytest.approx(float(getattr(exact, name)), rel=1e-9, abs=1e-12)


def test_base_vertex_disagreement_is_an_error_type():
    assert issubclass(BaseVertexDisagreement, ArithmeticError)


@given(st.integers(1, 5))
def test_single_vertex_with_loops(k):
    g = build(1, [(0, 0, i + 1) for i in range(k)])
    assert kirchhoff_index(g) == 0 and wiener_index(g) == 0
    assert xy_invariants(g) == (0, 0)
