"""Wiener index formulas specialised to trees."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .families import BETA_ARITY, beta
from .graph import BadParams, GraphError, MetrizedGraph
from .identities import IdentityReport, main2_coefficient, successive_sum
from .invariants import wiener_index
from .resistance import resistance_matrix


class NotATree(GraphError):
    pass


class NotUnitLengths(GraphError):
    pass


def _require_tree(t: MetrizedGraph, unit: bool = False) -> None:
    if not t.is_tree:
        raise NotATree(f"graph with v={t.v}, e={t.e} is not a tree")
    if unit and not t.has_unit_lengths:
        raise NotUnitLengths("formula needs every edge length equal to 1")


@dataclass(frozen=True)
class EdgeSplit:
    edge: int
    m: int  # vertices on the u side of the edge
    k: int  # vertices on the v side


@dataclass(frozen=True)
class BranchProfile:
    vertex: int
    sizes: tuple[int, ...]


def _rooted(t: MetrizedGraph, root: int = 0):
    """Parent, parent-edge and preorder of a tree rooted at ``root``."""
    parent = [-1] * t.v
    via = [-1] * t.v
    order = [root]
    seen = [False] * t.v
    seen[root] = True
    for x in order:
        for i in t.incidence[x]:
            y = t.edges[i].other(x)
            if not seen[y]:
                seen[y] = True
                parent[y], via[y] = x, i
                order.append(y)
    return parent, via, order


def edge_splits(t: MetrizedGraph) -> list[EdgeSplit]:
    _require_tree(t)
    parent, via, order = _rooted(t)
    size = [1] * t.v
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    below = {via[x]: size[x] for x in order[1:]}
    out = []
    for i, e in enumerate(t.edges):
        child = e.v if via[e.v] == i else e.u
        m = below[i] if child == e.u else t.v - below[i]
        out.append(EdgeSplit(i, m, t.v - m))
    return out


def wiener_via_splits(t: MetrizedGraph) -> int:
    _require_tree(t, unit=True)
    return sum(s.m * s.k for s in edge_splits(t))


def weighted_splits(t: MetrizedGraph) -> Fraction:
    """``sum_i l_i m_i k_i``: the Wiener index of a tree with arbitrary lengths."""
    return sum((t.edges[s.edge].length * s.m * s.k for s in edge_splits(t)), Fraction(0))


def branch_profile(t: MetrizedGraph, p: int) -> BranchProfile:
    _require_tree(t)
    parent, _, order = _rooted(t, p)
    size = [1] * t.v
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    return BranchProfile(p, tuple(size[x] for x in order[1:] if parent[x] == p))


def _path_vertices(parent, depth, a, b):
    nodes = set()
    while a != b:
        if depth[a] < depth[b]:
            a, b = b, a
        nodes.add(a)
        a = parent[a]
    nodes.add(a)
    return nodes


def count_path_triples(t: MetrizedGraph) -> int:
    """Number of 3-edge subsets lying on a common path.

    The smallest subtree spanning the six endpoints must itself be a path.
    """
    _require_tree(t)
    if t.e < 3:
        return 0
    parent, _, order = _rooted(t)
    depth = [0] * t.v
    for x in order[1:]:
        depth[x] = depth[parent[x]] + 1
    count = 0
    for trio in combinations(t.edges, 3):
        ends = sorted({x for e in trio for x in (e.u, e.v)})
        span = set()
        for a, b in combinations(ends, 2):
            span |= _path_vertices(parent, depth, a, b)
        # inside a spanning subtree, degree counts edges with both ends in the span
        deg = {x: 0 for x in span}
        for x in span:
            if parent[x] in span:
                deg[x] += 1
                deg[parent[x]] += 1
        if max(deg.values()) <= 2:
            count += 1
    return count


def wiener_via_triples(t: MetrizedGraph) -> int:
    _require_tree(t, unit=True)
    return (t.v - 1) ** 2 + count_path_triples(t)


def _e3(sizes) -> int:
    # elementary symmetric polynomial of degree 3
    e1 = e2 = e3 = 0
    for s in sizes:
        e3 += e2 * s
        e2 += e1 * s
        e1 += s
    return e3


def wiener_doyle_graver(t: MetrizedGraph) -> int:
    _require_tree(t, unit=True)
    v = t.v
    total = Fraction(v * (v * v - 1), 6)
    for p in range(v):
        if t.valence(p) >= 3:
            total -= _e3(branch_profile(t, p).sizes)
    return int(total)


def valence_formula_check(t: MetrizedGraph, which: str) -> IdentityReport:
    """Check one of the valence-weighted resistance formulas on a tree.

    ``term2tree``: total length equals ``sum_q (2 - val(q)) r(p, q)`` at every p.
    ``tree1``: ``W = (v * length + sum_{p,q} val(q) r(p,q)) / 4``.
    ``tree2``: ``W = (2v - 1)/4 * length + sum_{p,q} val(p) val(q) r(p,q) / 8``.
    """
    _require_tree(t)
    r = resistance_matrix(t)
    v, ell, val = t.v, t.total_length, t.valences
    if which == "term2tree":
        rows = [sum((2 - val[q]) * r[p, q] for q in range(v)) for p in range(v)]
        bad = [x for x in rows if x != ell]
        return IdentityReport("TERM2_TREE", ell, bad[0] if bad else rows[0], not bad,
                              t.fingerprint, witness={"checked": v})
    w = wiener_index(t)
    if which == "tree1":
        right = (v * ell + sum(val[q] * r[p, q] for p in range(v) for q in range(v))) / 4
    elif which == "tree2":
        right = Fraction(2 * v - 1, 4) * ell + sum(
            val[p] * val[q] * r[p, q] for p in range(v) for q in range(v)) / 8
    else:
        raise ValueError(f"unknown formula {which!r}")
    return IdentityReport(which.upper(), w, right, w == right, t.fingerprint)


def verify_main2_tree(t: MetrizedGraph, k: int) -> IdentityReport:
    """Successive-contraction formula for the Wiener index of a tree (all coefficients 1)."""
    _require_tree(t)
    v = t.v
    if v < 5 or not 1 <= k <= v - 4:
        raise BadParams(f"need v >= 5 and 1 <= k <= v-4, got v={v}, k={k}")
    nested = successive_sum(t, wiener_index, k)
    right = Fraction(factorial(v - 4 - k), factorial(v - 4)) * nested
    right -= main2_coefficient(v, k) * t.total_length
    w = wiener_index(t)
    return IdentityReport("MAIN2_TREE", w, right, w == right, t.fingerprint, {"k": k})


def beta_closed_form(which: str, params) -> int:
    params = list(params)
    if which not in BETA_ARITY or len(params) != BETA_ARITY[which]:
        raise BadParams(f"bad family/parameters: {which} {params}")
    if any(not isinstance(x, int) or x < 0 for x in params):
        raise BadParams(f"parameters must be nonnegative integers: {params}")
    if which == "beta1":
        s, t = params
        return (s + t + 1) ** 2 + s * t
    if which == "beta2":
        s, t = params
        return (s + t + 2) ** 2 + 2 * s * t + s + t
    if which == "beta3":
        s, t, k = params
        return (s + t + k + 3) ** 2 + 2 * (s * k + s * t + k * t + s + t + k)
    if which == "beta4":
        s, t, k, m = params
        return (s + t + k + m + 3) ** 2 + 2 * (s * k + s * t + k * t) + (m + 2) * (s + t + k)
    from .inverse_wiener import f_value, g_value

    return f_value(*params) if which == "beta5" else g_value(*params)


def beta_direct(which: str, params) -> int:
    return int(wiener_index(beta(which, params)))


def path_triples_closed(v: int) -> int:
    """Path-triple count of the path on ``v`` vertices."""
    return comb(v - 1, 3)
