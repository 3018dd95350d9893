"""Enumeration of unlabeled (free) trees.

Rooted trees are generated as canonical level sequences with the
Beyer-Hedetniemi successor rule; a rooted tree is kept only when its root is
a centroid, and for trees with two centroids only the rooting whose level
sequence is the larger of the two.  Every free tree is emitted exactly once.
"""

from __future__ import annotations

from typing import Iterator

from .graph import GraphError, MetrizedGraph, build

MAX_TREE_VERTICES = 16


class CapExceeded(GraphError):
    pass


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All rooted trees on ``n`` vertices as canonical level sequences (root level 0)."""
    if n < 1:
        return
    levels = list(range(n))
    while True:
        yield list(levels)
        p = n - 1
        while p > 0 and levels[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            levels[i] = levels[i - shift]


def subtree_sizes(levels: list[int]) -> list[int]:
    n = len(levels)
    size = [1] * n
    stack: list[int] = []
    for i in range(n):
        while stack and levels[stack[-1]] >= levels[i]:
            done = stack.pop()
            if stack:
                size[stack[-1]] += size[done]
        stack.append(i)
    while len(stack) > 1:
        done = stack.pop()
        size[stack[-1]] += size[done]
    return size


def parents_from_levels(levels: list[int]) -> list[int]:
    parent = [-1] * len(levels)
    last_at: dict[int, int] = {}
    for i, lev in enumerate(levels):
        if lev > 0:
            parent[i] = last_at[lev - 1]
        last_at[lev] = i
    return parent


def canonical_levels(adj: list[list[int]], root: int) -> list[int]:
    """Largest level sequence of the tree rooted at ``root``."""

    def rec(x, par, depth):
        kids = sorted((rec(y, x, depth + 1) for y in adj[x] if y != par), reverse=True)
        out = [depth]
        for k in kids:
            out.extend(k)
        return out

    return rec(root, -1, 0)


def _is_centroid_rooting(levels: list[int]) -> bool:
    n = len(levels)
    size = subtree_sizes(levels)
    children = [i for i in range(1, n) if levels[i] == 1]
    biggest = max((size[c] for c in children), default=0)
    if 2 * biggest < n:
        return True
    if 2 * biggest > n:
        return False
    # two centroids: keep the rooting with the larger canonical sequence
    other = next(c for c in children if 2 * size[c] == n)
    parent = parents_from_levels(levels)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(1, n):
        adj[i].append(parent[i])
        adj[parent[i]].append(i)
    return levels >= canonical_levels(adj, other)


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise CapExceeded(f"free-tree enumeration supports 1 <= n <= {MAX_TREE_VERTICES}, got {n}")
    for levels in rooted_level_sequences(n):
        if _is_centroid_rooting(levels):
            yield levels


def tree_from_levels(levels: list[int]) -> MetrizedGraph:
    parent = parents_from_levels(levels)
    return build(len(levels), [(parent[i], i, 1) for i in range(1, len(levels))])


class FreeTreeIter:
    """Iterable over the pairwise non-isomorphic unit trees on ``n`` vertices."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_TREE_VERTICES:
            raise CapExceeded(f"free-tree enumeration supports 1 <= n <= {MAX_TREE_VERTICES}, got {n}")
        self.n = n

    def level_sequences(self) -> Iterator[list[int]]:
        return free_tree_level_sequences(self.n)

    def __iter__(self) -> Iterator[MetrizedGraph]:
        for levels in self.level_sequences():
            yield tree_from_levels(levels)

    def count(self) -> int:
        return sum(1 for _ in self.level_sequences())


def enumerate_free_trees(n: int) -> FreeTreeIter:
    return FreeTreeIter(n)
