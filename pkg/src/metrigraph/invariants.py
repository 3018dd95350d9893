"""Scalar invariants: Kirchhoff and Wiener indices, x, y and r(G)."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .graph import MetrizedGraph
from .resistance import edge_reductions, resistance_matrix


class BaseVertexDisagreement(ArithmeticError):
    """x or y came out different at two base vertices."""


def kirchhoff_index(g: MetrizedGraph):
    return resistance_matrix(g).total() / 2


def distance_matrix(g: MetrizedGraph) -> list[list[Fraction]]:
    """Shortest-path distances by Dijkstra from every vertex."""
    n = g.v
    best: dict[tuple[int, int], Fraction] = {}
    for e in g.edges:
        if e.is_loop:
            continue
        key = (e.u, e.v)
        if key not in best or e.length < best[key]:
            best[key] = best[(e.v, e.u)] = e.length
    nbrs: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for (a, b), ell in best.items():
        nbrs[a].append((b, ell))
    rows = []
    for src in range(n):
        dist: list = [None] * n
        heap = [(Fraction(0), src)]
        while heap:
            d, x = heapq.heappop(heap)
            if dist[x] is not None:
                continue
            dist[x] = d
            for y, ell in nbrs[x]:
                if dist[y] is None:
                    heapq.heappush(heap, (d + ell, y))
        rows.append(dist)
    return rows


def wiener_index(g: MetrizedGraph):
    return sum(sum(row) for row in distance_matrix(g)) / 2


@dataclass(frozen=True)
class EdgeSums:
    """The four edge sums that x and y are assembled from, at one base vertex."""

    llR: object  # sum l^2 R / (l+R)^2
    lRR: object  # sum l R^2 / (l+R)^2
    diff: object  # sum l (R_a - R_b)^2 / (l+R)^2
    ab: object  # sum l R_a R_b / (l+R)^2

    @property
    def x(self):
        return self.llR + self.lRR * 3 / 4 - self.diff * 3 / 4

    @property
    def y(self):
        return self.lRR / 4 + self.diff * 3 / 4


def edge_sums(g: MetrizedGraph, p: int = 0, method: str = "downdate") -> EdgeSums:
    reds = edge_reductions(g, p, method)
    return EdgeSums(
        llR=sum(r.term_llR() for r in reds),
        lRR=sum(r.term_lRR() for r in reds),
        diff=sum(r.term_diff() for r in reds),
        ab=sum(r.term_ab() for r in reds),
    )


def _close(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))
    return a == b


def xy_invariants(g: MetrizedGraph, p: int = 0):
    """``(x, y)`` evaluated at base vertex ``p`` and cross-checked at a second vertex."""
    sums = edge_sums(g, p)
    x, y = sums.x, sums.y
    if g.v > 1:
        other = edge_sums(g, (p + 1) % g.v)
        if not (_close(x, other.x) and _close(y, other.y)):
            raise BaseVertexDisagreement(
                f"x/y differ between base vertices {p} and {(p + 1) % g.v}: "
                f"({x}, {y}) vs ({other.x}, {other.y})"
            )
    return x, y


def y_invariant(g: MetrizedGraph, p: int = 0):
    return edge_sums(g, p).y


def x_invariant(g: MetrizedGraph, p: int = 0):
    return edge_sums(g, p).x


def r_gamma(g: MetrizedGraph):
    """Sum of endpoint resistances over all edges (bridges give their length, loops 0)."""
    r = resistance_matrix(g)
    return sum((r[e.u, e.v] for e in g.edges), Fraction(0))


@dataclass(frozen=True)
class IndexReport:
    v: int
    e: int
    total_length: object
    kirchhoff: object
    wiener: object
    x: object
    y: object
    r_gamma: object

    def as_dict(self, render=str) -> dict:
        out = {"v": self.v, "e": self.e}
        for name in ("total_length", "kirchhoff", "wiener", "x", "y", "r_gamma"):
            out[name] = render(getattr(self, name))
        return out


def index_report(g: MetrizedGraph) -> IndexReport:
    x, y = xy_invariants(g)
    return IndexReport(
        v=g.v,
        e=g.e,
        total_length=g.total_length,
        kirchhoff=kirchhoff_index(g),
        wiener=wiener_index(g),
        x=x,
        y=y,
        r_gamma=r_gamma(g),
    )
