"""Effective resistance, voltages and per-edge circuit reductions.

Resistances come from the Laplacian with conductance ``1/length`` per edge,
grounded at vertex 0.  In exact mode (the default) the grounded system is
inverted with :func:`metrigraph.linalg.inverse`; inside
``numeric_mode("float")`` numpy is used instead.

For an edge ``e_i`` with endpoints ``p_i``, ``q_i`` and a base vertex ``p``,
:func:`edge_reduction` returns the two-terminal reduction of ``G - e_i``:
``R_i`` (resistance between the endpoints once the edge interior is gone),
``R_a = j_{p_i}(p, q_i)``, ``R_b = j_{q_i}(p, p_i)`` and
``R_c = j_p(p_i, q_i)``, all voltages in ``G - e_i``.  For a bridge ``R_i`` is
infinite; the terms built from it are read through the limits in
:class:`EdgeReduction`.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import BadIndex, MetrizedGraph, delete_edge_interior
from .linalg import inverse

INF = math.inf

_FLOAT_MODE = contextvars.ContextVar("metrigraph_float_mode", default=False)


@contextlib.contextmanager
def numeric_mode(mode: str):
    """Switch resistance solves between ``"exact"`` (Fractions) and ``"float"``."""
    if mode not in ("exact", "float"):
        raise ValueError(f"mode must be 'exact' or 'float', not {mode!r}")
    token = _FLOAT_MODE.set(mode == "float")
    try:
        yield
    finally:
        _FLOAT_MODE.reset(token)


def float_mode() -> bool:
    return _FLOAT_MODE.get()


def _conductance_table(g: MetrizedGraph):
    # parallel edges merge here only; loops carry no current
    cond: dict[tuple[int, int], Fraction] = {}
    for e in g.edges:
        if e.is_loop:
            continue
        key = (min(e.u, e.v), max(e.u, e.v))
        cond[key] = cond.get(key, Fraction(0)) + 1 / e.length
    return cond


def grounded_laplacian(g: MetrizedGraph, ground: int = 0):
    """Weighted Laplacian with the ``ground`` row and column removed."""
    n = g.v
    lap = [[Fraction(0)] * n for _ in range(n)]
    for (a, b), c in _conductance_table(g).items():
        lap[a][a] += c
        lap[b][b] += c
        lap[a][b] -= c
        lap[b][a] -= c
    keep = [x for x in range(n) if x != ground]
    return [[lap[i][j] for j in keep] for i in keep]


class ResistanceMatrix:
    """Symmetric table of pairwise effective resistances."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = rows

    def __getitem__(self, pq):
        p, q = pq
        return self.rows[p][q]

    def __len__(self):
        return len(self.rows)

    def total(self):
        """Sum over ordered pairs (twice the Kirchhoff index)."""
        return sum(sum(row) for row in self.rows)

    def row_sum(self, p):
        return sum(self.rows[p])


def _pairwise_from_green(n, green):
    # green[i][j] for vertices 1..n-1; vertex 0 is ground
    def g_(i, j):
        if i == 0 or j == 0:
            return 0
        return green[i - 1][j - 1]

    rows = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(p + 1, n):
            r = g_(p, p) + g_(q, q) - 2 * g_(p, q)
            rows[p][q] = rows[q][p] = r
    return rows


def _exact_matrix(g: MetrizedGraph) -> ResistanceMatrix:
    n = g.v
    zero = Fraction(0)
    if n == 1:
        return ResistanceMatrix([[zero]])
    if n == 2:
        c = sum(_conductance_table(g).values(), Fraction(0))
        return ResistanceMatrix([[zero, 1 / c], [1 / c, zero]])
    rows = _pairwise_from_green(n, inverse(grounded_laplacian(g)))
    for p in range(n):
        rows[p][p] = zero
    return ResistanceMatrix(rows)


def _float_matrix(g: MetrizedGraph) -> ResistanceMatrix:
    import numpy as np

    n = g.v
    if n == 1:
        return ResistanceMatrix([[0.0]])
    lap = np.array(grounded_laplacian(g), dtype=float)
    green = np.linalg.inv(lap)
    d = np.concatenate([[0.0], np.diag(green)])
    full = np.zeros((n, n))
    full[1:, 1:] = green
    r = d[:, None] + d[None, :] - 2 * full
    np.fill_diagonal(r, 0.0)
    return ResistanceMatrix(r.tolist())


def resistance_matrix(g: MetrizedGraph) -> ResistanceMatrix:
    """All pairwise resistances of ``g``, cached on the graph per numeric mode."""
    key = "_rmat_float" if float_mode() else "_rmat_exact"
    cached = g.__dict__.get(key)
    if cached is None:
        cached = _float_matrix(g) if float_mode() else _exact_matrix(g)
        g.__dict__[key] = cached
    return cached


def _check_vertices(g, *ps):
    for p in ps:
        if not isinstance(p, int) or not 0 <= p < g.v:
            raise BadIndex(f"vertex {p!r} not in 0..{g.v - 1}")


def effective_resistance(g: MetrizedGraph, p: int, q: int):
    _check_vertices(g, p, q)
    return resistance_matrix(g)[p, q]


def voltage(g: MetrizedGraph, z: int, x: int, y: int):
    """``j_z(x, y)``: potential of ``x`` over ``z`` with unit current in at ``y``, out at ``z``."""
    _check_vertices(g, z, x, y)
    r = resistance_matrix(g)
    return (r[x, z] + r[y, z] - r[x, y]) / 2


@dataclass(frozen=True)
class EdgeReduction:
    """Reduction of ``G - e_i`` seen from base vertex ``p``.

    ``R_i``, ``R_a`` and ``R_b`` may be :data:`INF` (bridges only).  ``side``
    is ``"p"`` or ``"q"`` for a bridge, naming the endpoint whose component
    contains the base vertex, else ``None``.
    """

    edge: int
    base: int
    length: Fraction
    R_i: object
    R_a: object
    R_b: object
    R_c: object
    bridge: bool
    loop: bool = False
    side: str | None = None

    # Limit table.  Each term is exact for ordinary edges and takes its
    # R_i -> infinity limit for a bridge; self-loops have R_i = R_a = R_b = 0.

    def coefficient(self):
        """``R_i / (l_i + R_i)``."""
        if self.bridge:
            return 1
        return self.R_i / (self.length + self.R_i)

    def length_fraction(self):
        """``l_i / (l_i + R_i)``."""
        if self.bridge:
            return 0
        return self.length / (self.length + self.R_i)

    def endpoint_resistance(self):
        """``l_i R_i / (l_i + R_i)``, the resistance between the edge's endpoints."""
        if self.bridge:
            return self.length
        return self.length * self.R_i / (self.length + self.R_i)

    def term_lRR(self):
        """``l_i R_i^2 / (l_i + R_i)^2``."""
        if self.bridge:
            return self.length
        s = self.length + self.R_i
        return self.length * self.R_i * self.R_i / (s * s)

    def term_llR(self):
        """``l_i^2 R_i / (l_i + R_i)^2``."""
        if self.bridge:
            return 0
        s = self.length + self.R_i
        return self.length * self.length * self.R_i / (s * s)

    def term_diff(self):
        """``l_i (R_a - R_b)^2 / (l_i + R_i)^2``."""
        if self.bridge:
            return self.length
        s = self.length + self.R_i
        d = self.R_a - self.R_b
        return self.length * d * d / (s * s)

    def term_ab(self):
        """``l_i R_a R_b / (l_i + R_i)^2``."""
        if self.bridge:
            return 0
        s = self.length + self.R_i
        return self.length * self.R_a * self.R_b / (s * s)

    def ab_over_R(self):
        """``R_a R_b / R_i``."""
        if self.bridge or self.loop:
            return 0
        return self.R_a * self.R_b / self.R_i

    def term_ab_over_R(self):
        """``l_i R_a R_b / (R_i (l_i + R_i))``."""
        if self.bridge or self.loop:
            return 0
        return self.length * self.R_a * self.R_b / (self.R_i * (self.length + self.R_i))

    def contracted_resistance(self):
        """Resistance from the base vertex to the merged vertex after contracting the edge."""
        return self.ab_over_R() + self.R_c

    def endpoint_resistances(self):
        """``(r(p_i, p), r(q_i, p))`` rebuilt from the reduction values."""
        if self.bridge:
            if self.side == "p":
                return self.R_c, self.length + self.R_c
            return self.length + self.R_c, self.R_c
        s = self.length + self.R_i
        return (
            (self.length + self.R_b) * self.R_a / s + self.R_c,
            (self.length + self.R_a) * self.R_b / s + self.R_c,
        )


def _deleted_resistance_fn(g: MetrizedGraph, i: int, method: str):
    """Resistance function of ``G - e_i`` (connected case) by the chosen route."""
    e = g.edges[i]
    if method == "delete":
        (comp,) = delete_edge_interior(g, i)
        rm = resistance_matrix(comp.graph)
        return lambda x, y: rm[x, y]
    if method != "downdate":
        raise ValueError(f"unknown method {method!r}")
    # rank-one removal of conductance 1/l between a and b:
    # r'(x,y) = r(x,y) + (h(x) - h(y))^2 / (l - r(a,b)), h(x) = (r(x,b) - r(x,a)) / 2
    r = resistance_matrix(g)
    a, b = e.u, e.v
    denom = e.length - r[a, b]
    h = [(r[x, b] - r[x, a]) / 2 for x in range(g.v)]
    return lambda x, y: r[x, y] + (h[x] - h[y]) ** 2 / denom


def edge_reduction(g: MetrizedGraph, i: int, p: int, method: str = "downdate") -> EdgeReduction:
    """Reduction values of edge ``i`` with respect to base vertex ``p``.

    ``method="delete"`` solves the Laplacian of ``G - e_i`` directly;
    ``"downdate"`` derives the same resistances from those of ``G`` by a
    rank-one update.  Both give identical exact results.
    """
    e = g._check_edge(i)
    _check_vertices(g, p)
    zero = 0.0 if float_mode() else Fraction(0)
    if e.is_loop:
        return EdgeReduction(i, p, e.length, zero, zero, zero,
                             resistance_matrix(g)[p, e.u], bridge=False, loop=True)
    pi, qi = e.u, e.v
    if i in g.bridges:
        comps = delete_edge_interior(g, i)
        on_p = next(c for c in comps if pi in c.vertices)
        r = resistance_matrix(g)
        if p in on_p.vertices:
            return EdgeReduction(i, p, e.length, INF, zero, INF, r[p, pi], bridge=True, side="p")
        return EdgeReduction(i, p, e.length, INF, INF, zero, r[p, qi], bridge=True, side="q")
    rh = _deleted_resistance_fn(g, i, method)
    R_i = rh(pi, qi)
    R_a = (rh(p, pi) + R_i - rh(p, qi)) / 2
    R_b = (rh(p, qi) + R_i - rh(p, pi)) / 2
    R_c = (rh(pi, p) + rh(qi, p) - R_i) / 2
    return EdgeReduction(i, p, e.length, R_i, R_a, R_b, R_c, bridge=False)


def edge_reductions(g: MetrizedGraph, p: int, method: str = "downdate") -> list[EdgeReduction]:
    return [edge_reduction(g, i, p, method) for i in range(g.e)]


def contraction_coefficient(g: MetrizedGraph, i: int):
    """``R_i / (l_i + R_i)`` for edge ``i``: 1 for a bridge, 0 for a self-loop."""
    e = g._check_edge(i)
    if e.is_loop:
        return Fraction(0)
    if i in g.bridges:
        return Fraction(1)
    # r(p_i, q_i) = l_i R_i / (l_i + R_i), so the coefficient is r(p_i, q_i) / l_i
    return resistance_matrix(g)[e.u, e.v] / e.length
