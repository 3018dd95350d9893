import pytest

from metrigraph import CapExceeded, enumerate_free_trees
from metrigraph.freetrees import (
    free_tree_level_sequences,
    rooted_level_sequences,
    tree_from_levels,
)
from oracles import free_tree_classes, tree_canonical

# OEIS A000055 (free trees) and A000081 (rooted trees)
FREE = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]
ROOTED = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766, 12486]


@pytest.mark.parametrize("n", range(1, 17))
def test_free_counts(n):
    assert enumerate_free_trees(n).count() == FREE[n - 1]


@pytest.mark.parametrize("n", range(1, 14))
def test_rooted_counts(n):
    assert sum(1 for _ in rooted_level_sequences(n)) == ROOTED[n - 1]


def _canon(t):
    return tree_canonical(t.v, [(e.u, e.v) for e in t.edges])


@pytest.mark.parametrize("n", range(1, 10))
def test_against_brute_force(n):
    ours = [_canon(t) for t in enumerate_free_trees(n)]
    assert len(ours) == len(set(ours))
    assert set(ours) == set(free_tree_classes(n))


def test_n4_is_path_and_star():
    shapes = sorted(sorted(t.valences) for t in enumerate_free_trees(4))
    assert shapes == [[1, 1, 1, 3], [1, 1, 2, 2]]


def test_trees_have_unit_lengths():
    for t in enumerate_free_trees(7):
        assert t.is_tree and t.has_unit_lengths and t.v == 7


@pytest.mark.parametrize("n", [0, 17])
def test_cap(n):
    with pytest.raises(CapExceeded):
        enumerate_free_trees(n)
    with pytest.raises(CapExceeded):
        list(free_tree_level_sequences(n))


def test_tree_from_levels():
    t = tree_from_levels([0, 1, 2, 1])
    assert t.is_tree and sorted(t.valences) == [1, 1, 2, 2]
