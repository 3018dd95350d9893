"""Metrized multigraphs with exact rational edge lengths.

A :class:`MetrizedGraph` is an immutable value: a tuple of vertex labels and a
tuple of :class:`Edge` records whose endpoints are indices into the label
tuple.  Self-loops and parallel edges are allowed.  Every constructor checks
that the graph is connected and that all lengths are strictly positive.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Base class for invalid graph input."""


class DisconnectedGraph(GraphError):
    def __init__(self, components):
        self.components = [list(c) for c in components]
        parts = "; ".join("{" + ", ".join(map(str, c)) + "}" for c in self.components)
        super().__init__(f"graph is disconnected: {len(self.components)} components: {parts}")


class NonPositiveLength(GraphError):
    pass


class BadIndex(GraphError):
    pass


class BadEdgeId(GraphError):
    pass


class SelfLoopContraction(GraphError):
    pass


class BadParams(GraphError):
    pass


def as_length(value) -> Fraction:
    """Coerce ints, Fractions, ``"p/q"`` strings and decimal strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # floats are accepted only through their exact decimal repr
        return Fraction(repr(value))
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise NonPositiveLength(f"not a rational length: {value!r}") from exc


class Edge(NamedTuple):
    u: int
    v: int
    length: Fraction

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values(), key=lambda c: c[0])


@dataclass(frozen=True)
class MetrizedGraph:
    """Connected multigraph with positive rational edge lengths."""

    labels: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise BadIndex("a metrized graph needs at least one vertex")
        if len(set(self.labels)) != n:
            raise BadIndex("vertex labels must be distinct")
        for i, e in enumerate(self.edges):
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise BadIndex(f"edge {i} has an endpoint outside 0..{n - 1}: {e.u}, {e.v}")
            if not isinstance(e.length, Fraction):
                raise NonPositiveLength(f"edge {i} length must be a Fraction, got {e.length!r}")
            if e.length <= 0:
                raise NonPositiveLength(f"edge {i} has non-positive length {e.length}")
        comps = _components(n, ((e.u, e.v) for e in self.edges))
        if len(comps) > 1:
            raise DisconnectedGraph([[self.labels[x] for x in c] for c in comps])

    # basic counts ---------------------------------------------------------

    @property
    def v(self) -> int:
        return len(self.labels)

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def total_length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    def valence(self, p: int) -> int:
        """Number of edge directions at ``p``; a self-loop counts twice."""
        return self.valences[p]

    @cached_property
    def valences(self) -> tuple[int, ...]:
        val = [0] * self.v
        for e in self.edges:
            val[e.u] += 1
            val[e.v] += 1
        return tuple(val)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex (loops listed once)."""
        inc: list[list[int]] = [[] for _ in range(self.v)]
        for i, e in enumerate(self.edges):
            inc[e.u].append(i)
            if e.v != e.u:
                inc[e.v].append(i)
        return tuple(tuple(x) for x in inc)

    @property
    def is_tree(self) -> bool:
        return self.e == self.v - 1

    @property
    def has_unit_lengths(self) -> bool:
        return all(e.length == 1 for e in self.edges)

    @cached_property
    def bridges(self) -> frozenset[int]:
        """Ids of edges whose interior removal disconnects the graph."""
        out = set()
        for i, e in enumerate(self.edges):
            if e.is_loop:
                continue
            rest = ((f.u, f.v) for j, f in enumerate(self.edges) if j != i)
            if len(_components(self.v, rest)) > 1:
                out.add(i)
        return frozenset(out)

    def is_bridge(self, i: int) -> bool:
        self._check_edge(i)
        return i in self.bridges

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise BadIndex(f"unknown vertex label {label!r}") from None

    def _check_edge(self, i: int) -> Edge:
        if not isinstance(i, int) or not 0 <= i < self.e:
            raise BadEdgeId(f"edge id {i!r} not in 0..{self.e - 1}")
        return self.edges[i]

    def _check_vertex(self, p: int) -> int:
        if not isinstance(p, int) or not 0 <= p < self.v:
            raise BadIndex(f"vertex {p!r} not in 0..{self.v - 1}")
        return p

    # canonical form -------------------------------------------------------

    def canonical(self) -> tuple:
        """Order-insensitive description used for equality of parsed files."""
        es = sorted((min(e.u, e.v), max(e.u, e.v), e.length) for e in self.edges)
        return (self.labels, tuple(es))

    @cached_property
    def fingerprint(self) -> str:
        text = repr((self.v, [(a, b, str(c)) for a, b, c in self.canonical()[1]]))
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def __repr__(self) -> str:
        return f"MetrizedGraph(v={self.v}, e={self.e}, length={self.total_length})"


def build(vertices, edges: Iterable[Sequence]) -> MetrizedGraph:
    """Validated graph from a vertex count (or label list) and ``(u, v, length)`` triples.

    Endpoints are vertex indices.  Raises :class:`DisconnectedGraph`,
    :class:`NonPositiveLength` or :class:`BadIndex`.
    """
    if isinstance(vertices, int):
        if vertices < 1:
            raise BadIndex("vertex count must be positive")
        labels = tuple(str(i) for i in range(vertices))
    else:
        labels = tuple(str(x) for x in vertices)
    es = []
    for item in edges:
        if len(item) != 3:
            raise BadIndex(f"edge must be (u, v, length), got {item!r}")
        u, w, length = item
        if not isinstance(u, int) or not isinstance(w, int):
            raise BadIndex(f"edge endpoints must be integer indices, got {u!r}, {w!r}")
        es.append(Edge(u, w, as_length(length)))
    return MetrizedGraph(labels, tuple(es))


# edge operations --------------------------------------------------------------


class VertexMap(tuple):
    """``vmap[old] == new`` after a contraction; a surjection onto ``range(max+1)``."""

    def compose(self, later: "VertexMap") -> "VertexMap":
        return VertexMap(later[x] for x in self)


def contract_edge(g: MetrizedGraph, i: int) -> tuple[MetrizedGraph, VertexMap]:
    """Contract edge ``i``; the merged vertex takes the smaller endpoint index.

    Other edges keep their order and lengths; edges parallel to ``i`` become
    self-loops.
    """
    e = g._check_edge(i)
    if e.is_loop:
        raise SelfLoopContraction(f"edge {i} is a self-loop at vertex {e.u}")
    keep, gone = min(e.u, e.v), max(e.u, e.v)
    vmap = VertexMap(
        (keep if x == gone else x) - (1 if x > gone else 0) for x in range(g.v)
    )
    labels = tuple(lab for x, lab in enumerate(g.labels) if x != gone)
    edges = tuple(
        Edge(vmap[f.u], vmap[f.v], f.length) for j, f in enumerate(g.edges) if j != i
    )
    return MetrizedGraph(labels, edges), vmap


@dataclass(frozen=True)
class ContractionSeq:
    """Edge ids to contract in order, each relative to the previous result."""

    edges: tuple[int, ...]

    def apply(self, g: MetrizedGraph) -> tuple[MetrizedGraph, VertexMap]:
        vmap = VertexMap(range(g.v))
        for i in self.edges:
            g, step = contract_edge(g, i)
            vmap = vmap.compose(step)
        return g, vmap

    def is_admissible(self, g: MetrizedGraph) -> bool:
        try:
            self.apply(g)
        except SelfLoopContraction:
            return False
        return True


class Component(NamedTuple):
    vertices: tuple[int, ...]
    graph: MetrizedGraph


def delete_edge_interior(g: MetrizedGraph, i: int) -> list[Component]:
    """Connected components of ``g`` with the interior of edge ``i`` removed.

    Each component records the original indices of its vertices (ascending)
    and its own re-indexed graph.
    """
    g._check_edge(i)
    rest = [f for j, f in enumerate(g.edges) if j != i]
    out = []
    for comp in _components(g.v, ((f.u, f.v) for f in rest)):
        index = {x: k for k, x in enumerate(comp)}
        sub = tuple(Edge(index[f.u], index[f.v], f.length) for f in rest if f.u in index)
        out.append(Component(tuple(comp), MetrizedGraph(tuple(g.labels[x] for x in comp), sub)))
    return out
