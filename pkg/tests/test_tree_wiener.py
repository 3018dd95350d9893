import itertools
from math import comb

import pytest
from hypothesis import given

from conftest import lengths, multigraphs
from metrigraph import beta, build, circle, enumerate_free_trees, path, star, wiener_index
from metrigraph.families import BETA_ARITY
from metrigraph.tree_wiener import (
    NotATree,
    NotUnitLengths,
    beta_closed_form,
    beta_direct,
    branch_profile,
    count_path_triples,
    edge_splits,
    valence_formula_check,
    verify_main2_tree,
    weighted_splits,
    wiener_doyle_graver,
    wiener_via_splits,
    wiener_via_triples,
)
from oracles import tree_wiener_bfs


def test_p4_splits():
    assert sorted((s.m, s.k) for s in edge_splits(path(4))) == [(1, 3), (2, 2), (3, 1)]
    assert wiener_via_splits(path(4)) == 10


@pytest.mark.parametrize("v", range(2, 9))
def test_star_and_path(v):
    assert wiener_via_splits(star(v)) == (v - 1) ** 2
    assert count_path_triples(star(v)) == 0
    assert count_path_triples(path(v)) == comb(v - 1, 3)
    assert wiener_doyle_graver(path(v)) == v * (v * v - 1) // 6
    assert wiener_doyle_graver(star(v)) == (v - 1) ** 2


def test_single_edge():
    assert wiener_via_splits(path(2)) == 1


def test_triples_examples():
    assert wiener_via_triples(path(4)) == 10
    assert wiener_via_triples(star(4)) == 9
    for s, t in itertools.product(range(4), repeat=2):
        assert count_path_triples(beta("beta1", [s, t])) == s * t
        assert wiener_via_triples(beta("beta2", [s, t])) == (s + t + 2) ** 2 + 2 * s * t + s + t


def test_branch_profile():
    prof = branch_profile(beta("beta3", [1, 2, 0]), 0)
    assert sorted(prof.sizes) == [1, 2, 3] and sum(prof.sizes) == prof.vertex + 6


def test_errors():
    with pytest.raises(NotATree):
        wiener_via_splits(circle(4))
    with pytest.raises(NotUnitLengths):
        wiener_via_splits(path(3, [1, 2]))
    with pytest.raises(NotUnitLengths):
        wiener_doyle_graver(path(3, [1, 2]))
    with pytest.raises(NotATree):
        count_path_triples(circle(3))


@given(multigraphs(min_v=2, max_v=9, trees_only=True))
def test_weighted_splits(t):
    assert weighted_splits(t) == wiener_index(t)


@given(multigraphs(min_v=2, max_v=8, trees_only=True))
def test_valence_formulas_general_lengths(t):
    for which in ("term2tree", "tree1", "tree2"):
        assert valence_formula_check(t, which).passed


def test_term2tree_on_p3():
    rep = valence_formula_check(path(3), "term2tree")
    assert rep.passed and rep.left == 2


@given(lengths, lengths, lengths)
def test_p4_tree2(a, b, c):
    rep = valence_formula_check(path(4, [a, b, c]), "tree2")
    assert rep.passed and rep.right == 3 * (a + b + c) + b


def test_s4_tree1():
    t = star(4, [1, 2, 3])
    rep = valence_formula_check(t, "tree1")
    assert rep.passed and rep.left == 18


@pytest.mark.parametrize("v", [5, 6, 7])
def test_main2_for_trees(v):
    for t in enumerate_free_trees(v):
        for k in range(1, v - 3):
            assert verify_main2_tree(t, k).passed


def test_main2_tree_bad_k():
    with pytest.raises(ValueError):
        verify_main2_tree(path(5), 2)


@pytest.mark.parametrize("v", range(1, 11))
def test_four_way_and_bounds(v):
    for t in enumerate_free_trees(v):
        w = wiener_index(t)
        assert w == tree_wiener_bfs(t.v, [(e.u, e.v) for e in t.edges])
        if v >= 2:
            assert wiener_via_splits(t) == wiener_via_triples(t) == wiener_doyle_graver(t) == w
            assert (v - 1) ** 2 <= w <= v * (v * v - 1) // 6


def test_beta_examples():
    assert beta_closed_form("beta1", [1, 1]) == 10
    assert beta_closed_form("beta5", [0] * 5) == beta_direct("beta5", [0] * 5) == 18
    assert beta_closed_form("beta6", [0] * 6) == beta_direct("beta6", [0] * 6) == 29


@pytest.mark.parametrize("which", sorted(BETA_ARITY))
def test_beta_grid(which):
    top = 2 if which == "beta6" else 3
    for params in itertools.product(range(top + 1), repeat=BETA_ARITY[which]):
        assert beta_closed_form(which, params) == beta_direct(which, params)


def test_beta_bad_params():
    with pytest.raises(ValueError):
        beta_closed_form("beta2", [1])
    with pytest.raises(ValueError):
        beta_closed_form("beta7", [1, 1])
    with pytest.raises(ValueError):
        beta_closed_form("beta1", [1, -2])


def test_non_unit_tree_allowed_for_triples():
    t = build(4, [(0, 1, 2), (1, 2, 3), (2, 3, 1)])
    assert count_path_triples(t) == 1
