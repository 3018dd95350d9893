"""Contraction identities and bounds for the Kirchhoff index and related invariants.

Every catalog entry evaluates both sides of one identity (or the two sides of
an inequality) on a graph and returns an :class:`IdentityReport`.  In exact
mode a pass means exact rational equality; inside
``numeric_mode("float")`` a relative tolerance is used.

The contraction coefficient of an edge is ``R_i / (l_i + R_i)``: 1 for a
bridge, 0 for a self-loop.  Self-loops are therefore skipped by every
contraction sum.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .graph import MetrizedGraph, VertexMap, contract_edge
from .invariants import edge_sums, kirchhoff_index, r_gamma
from .resistance import (
    contraction_coefficient,
    edge_reduction,
    float_mode,
    numeric_mode,
    resistance_matrix,
)

DEFAULT_TOL = 1e-9


class PreconditionUnmet(ValueError):
    def __init__(self, identity: str, reason: str):
        self.identity = identity
        self.reason = reason
        super().__init__(f"{identity}: {reason}")


class DepthTooLarge(ValueError):
    pass


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    left: object
    right: object
    passed: bool
    fingerprint: str
    params: dict = field(default_factory=dict)
    relation: str = "=="
    lower: object = None
    witness: dict = field(default_factory=dict)


def values_equal(a, b, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(a, tuple):
        return len(a) == len(b) and all(values_equal(x, y, tol) for x, y in zip(a, b))
    if isinstance(a, float) or isinstance(b, float):
        return abs(a - b) <= tol * max(1.0, abs(a))
    return a == b


def _leq(a, b, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return a <= b + tol * max(1.0, abs(b))
    return a <= b


# contraction sums ---------------------------------------------------------------


def contraction_terms(g: MetrizedGraph):
    """Yield ``(edge id, coefficient, contracted graph, vertex map)`` for every non-loop edge."""
    for i, e in enumerate(g.edges):
        if e.is_loop:
            continue
        h, vmap = contract_edge(g, i)
        yield i, contraction_coefficient(g, i), h, vmap


def contraction_sum(g: MetrizedGraph, f: Callable[[MetrizedGraph], object]):
    """``sum_i R_i/(l_i+R_i) * f(G contracted along e_i)``, loops skipped."""
    return sum((c * f(h) for _, c, h, _ in contraction_terms(g)), Fraction(0))


def _scale(c, value):
    if isinstance(value, tuple):
        return tuple(c * x for x in value)
    return c * value


def _accumulate(total, value):
    if total is None:
        return value
    if isinstance(value, tuple):
        return tuple(a + b for a, b in zip(total, value))
    return total + value


def successive_sum(g: MetrizedGraph, f: Callable, k: int, with_map: bool = False):
    """k-fold nested contraction sum over admissible contractions.

    ``f`` may return a number or a tuple of numbers (summed componentwise).
    With ``with_map=True`` it is called as ``f(graph, vmap)``, where ``vmap``
    sends each vertex of ``g`` to its image in ``graph``.
    """
    if not 1 <= k <= g.v - 2:
        raise DepthTooLarge(f"depth {k} outside 1..{g.v - 2} for a graph with {g.v} vertices")

    def rec(h, vmap, depth):
        if depth == 0:
            return f(h, vmap) if with_map else f(h)
        total = None
        for i, e in enumerate(h.edges):
            if e.is_loop:
                continue
            c = contraction_coefficient(h, i)
            h2, step = contract_edge(h, i)
            total = _accumulate(total, _scale(c, rec(h2, vmap.compose(step), depth - 1)))
        return total

    return rec(g, VertexMap(range(g.v)), k)


def main2_coefficient(v: int, k: int) -> Fraction:
    """Closed-form coefficient of y after k successive applications of the first contraction formula."""
    return Fraction((v * v - (k + 2) * v + k - 1) * k, (v - k - 2) * (v - k - 3))


def main2_coefficient_sum(v: int, k: int) -> Fraction:
    """The same coefficient accumulated term by term."""
    total = Fraction(v, v - 4)
    for i in range(1, k):
        prod = Fraction(1)
        for j in range(1, i + 1):
            prod *= Fraction(v - 1 - j, v - 3 - j)
        total += Fraction(v - i, v - 4 - i) * prod
    return total


# catalog --------------------------------------------------------------------------


def _merged_sum(h: MetrizedGraph, vmap: VertexMap, e) -> object:
    """Sum over vertices of the contracted graph of their resistance to the merged vertex."""
    return resistance_matrix(h).row_sum(vmap[e.u])


def _endpoint_pair_sum(g: MetrizedGraph, p: int):
    """``sum_i c_i (r(p_i,p) + r(q_i,p))`` together with the matching ``l/(l+R)`` sum."""
    r = resistance_matrix(g)
    with_c = with_l = 0
    for i, e in enumerate(g.edges):
        red = edge_reduction(g, i, p)
        s = r[e.u, p] + r[e.v, p]
        with_c += red.coefficient() * s
        with_l += red.length_fraction() * s
    return with_c, with_l


def _y(g):
    return edge_sums(g).y


def _kc1(g, params):
    kf = kirchhoff_index(g)
    right = 0
    for i, c, h, vmap in contraction_terms(g):
        right += c * kirchhoff_index(h) + c * _merged_sum(h, vmap, g.edges[i])
    return (g.v - 2) * kf, right


def _res_sum(g, params):
    p = params.get("p", 0)
    v = g.v
    sums = edge_sums(g, p)
    right = 2 * contraction_sum(g, kirchhoff_index) + 2 * v * sums.ab - v * sums.lRR
    right += sum(_endpoint_pair_sum(g, q)[0] for q in range(v))
    return 2 * (v - 2) * kirchhoff_index(g), right


def _term2(g, params):
    r = resistance_matrix(g)
    results = []
    for p in _vertices(g, params):
        t2 = edge_sums(g, p).diff
        with_c, with_l = _endpoint_pair_sum(g, p)
        first = with_l - sum((g.valence(q) - 2) * r[p, q] for q in range(g.v))
        second = 2 * r.row_sum(p) - with_c
        results.append((p, t2, (first, second)))
    return results


def _kf_term2(g, params):
    p = params.get("p", 0)
    total = sum(_endpoint_pair_sum(g, q)[0] for q in range(g.v))
    return 4 * kirchhoff_index(g), g.v * edge_sums(g, p).diff + total


def _main1(g, params):
    return (g.v - 4) * kirchhoff_index(g), contraction_sum(g, kirchhoff_index) - g.v * _y(g)


def _prop_kf(g, params):
    right = g.v * _y(g)
    for i, c, h, vmap in contraction_terms(g):
        right += c * _merged_sum(h, vmap, g.edges[i])
    return 2 * kirchhoff_index(g), right


def _res_contract(g, params):
    r = resistance_matrix(g)
    terms = [(c, resistance_matrix(h), vmap) for _, c, h, vmap in contraction_terms(g)]
    pairs = [(params["p"], params["q"])] if "p" in params and "q" in params else [
        (p, q) for p in range(g.v) for q in range(p + 1, g.v)
    ]
    out = []
    for p, q in pairs:
        right = sum((c * rh[vm[p], vm[q]] for c, rh, vm in terms), Fraction(0))
        out.append(((p, q), (g.v - 2) * r[p, q], right))
    return out


def _r_contract(g, params):
    return (g.v - 2) * r_gamma(g), contraction_sum(g, r_gamma)


def _xy_contract(g, params):
    s = edge_sums(g)
    rx = ry = 0
    for _, c, h, _ in contraction_terms(g):
        hs = edge_sums(h)
        rx += c * hs.x
        ry += c * hs.y
    return ((g.v - 2) * s.x, (g.v - 2) * s.y), (rx, ry)


def _main2(g, params):
    v, k = g.v, params["k"]
    nested = successive_sum(g, kirchhoff_index, k)
    right = Fraction(factorial(v - 4 - k), factorial(v - 4)) * nested
    right -= main2_coefficient(v, k) * _y(g)
    return kirchhoff_index(g), right


def _split_leaf(weighted: bool):
    def leaf(h, vmap):
        # h has two vertices; count how many original vertices fell on each
        m = sum(1 for x in vmap if x == 0)
        k = len(vmap) - m
        r = resistance_matrix(h)[0, 1]
        return m * k * r if weighted else r

    return leaf


def _mk_oracle(g, params):
    v = g.v
    if v == 2:
        return kirchhoff_index(g), resistance_matrix(g)[0, 1]
    nested = successive_sum(g, _split_leaf(True), v - 2, with_map=True)
    return kirchhoff_index(g), nested / factorial(v - 2)


def _y_leaf(g, params):
    nested = successive_sum(g, _split_leaf(False), g.v - 2, with_map=True)
    return factorial(g.v - 2) * _y(g), nested


def _xy_successive(g, params):
    v, k = g.v, params["k"]
    scale = Fraction(factorial(v - 2), factorial(v - k - 2))
    s = edge_sums(g)
    both = successive_sum(g, lambda h: (edge_sums(h).x, edge_sums(h).y), k)
    return (scale * s.x, scale * s.y), both


def _v23(g, params):
    kf, y = kirchhoff_index(g), _y(g)
    return kf, (y if g.v == 2 else 2 * y)


def _xy_sum(g, params):
    s = edge_sums(g)
    return s.x + s.y, r_gamma(g)


def _vertices(g, params):
    return [params["p"]] if "p" in params else range(g.v)


def _pindep(term: str):
    def run(g, params):
        values = [(p, getattr(edge_sums(g, p), term)) for p in range(g.v)]
        return values

    return run


def _edge_vertex_pairs(g, params):
    for i, e in enumerate(g.edges):
        for p in _vertices(g, params):
            yield i, e, p


def _lem_res_sum(g, params):
    r = resistance_matrix(g)
    out = []
    for i, e, p in _edge_vertex_pairs(g, params):
        red = edge_reduction(g, i, p)
        left = r[e.u, p] + r[e.v, p]
        if e.is_loop:
            # contraction is undefined for a loop; r_contracted(p, p_i) is r(p, p_i)
            contracted = r[p, e.u]
        else:
            h, vmap = contract_edge(g, i)
            contracted = resistance_matrix(h)[vmap[p], vmap[e.u]]
        right = 2 * contracted + red.endpoint_resistance() - 2 * red.term_ab_over_R()
        out.append(((i, p), left, right))
    return out


def _contract_res(g, params):
    out = []
    for i, e, p in _edge_vertex_pairs(g, params):
        if e.is_loop:
            continue
        red = edge_reduction(g, i, p)
        h, vmap = contract_edge(g, i)
        out.append(((i, p), resistance_matrix(h)[vmap[p], vmap[e.u]], red.contracted_resistance()))
    return out


def _eqn2term0(g, params):
    r = resistance_matrix(g)
    out = []
    for i, e, p in _edge_vertex_pairs(g, params):
        red = edge_reduction(g, i, p)
        out.append(((i, p), (r[e.u, p], r[e.v, p]), tuple(red.endpoint_resistances())))
    return out


@dataclass(frozen=True)
class CatalogEntry:
    ident: str
    kind: str  # "eq", "sweep", "pindep", "bound"
    func: Callable
    check: Callable[[MetrizedGraph, dict], str | None] = lambda g, p: None
    param_sets: Callable[[MetrizedGraph], list] = lambda g: [{}]


def _min_v(n):
    return lambda g, params: None if g.v >= n else f"requires at least {n} vertices"


def _max_v_for(name, lo, default_cap):
    def check(g, params):
        cap = params.get("max_v", default_cap)
        if g.v < lo:
            return f"requires at least {lo} vertices"
        if g.v > cap:
            return f"nested sum limited to v <= {cap} (set max_v to raise)"
        return None

    return check


def _main2_check(g, params):
    if g.v < 5:
        return "requires at least 5 vertices"
    k = params.get("k")
    if k is None or not 1 <= k <= g.v - 4:
        return f"k must satisfy 1 <= k <= v-4 = {g.v - 4}"
    return None


def _xy_successive_check(g, params):
    base = _max_v_for("XY_SUCCESSIVE", 3, 6)(g, params)
    if base:
        return base
    k = params.get("k")
    if k is None or not 1 <= k <= g.v - 2:
        return f"k must satisfy 1 <= k <= v-2 = {g.v - 2}"
    return None


def _bound_v4(g, params):
    y = _y(g)
    return 3 * y, kirchhoff_index(g), 4 * y


def _bound_up(g, params):
    return None, kirchhoff_index(g), Fraction(g.v * g.v, 4) * _y(g)


def _bound_uplow(g, params):
    y = _y(g)
    return (g.v - 1) * y, kirchhoff_index(g), Fraction(g.v * g.v - 3 * g.v + 4, 2) * y


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry):
    CATALOG[entry.ident] = entry


_register(CatalogEntry("KC1", "eq", _kc1, _min_v(2)))
_register(CatalogEntry("RES_SUM", "eq", _res_sum, _min_v(2)))
_register(CatalogEntry("TERM2", "sweep3", _term2))
_register(CatalogEntry("KF_TERM2", "eq", _kf_term2))
_register(CatalogEntry("MAIN1", "eq", _main1, _min_v(4)))
_register(CatalogEntry("PROP_KF", "eq", _prop_kf, _min_v(2)))
_register(CatalogEntry("RES_CONTRACT", "sweep", _res_contract, _min_v(2)))
_register(CatalogEntry("R_CONTRACT", "eq", _r_contract, _min_v(2)))
_register(CatalogEntry("XY_CONTRACT", "eq", _xy_contract, _min_v(2)))
_register(CatalogEntry(
    "MAIN2", "eq", _main2, _main2_check,
    lambda g: [{"k": k} for k in range(1, g.v - 3)] or [{"k": 1}],
))
_register(CatalogEntry("MK_ORACLE", "eq", _mk_oracle, _max_v_for("MK_ORACLE", 2, 6)))
_register(CatalogEntry("Y_LEAF", "eq", _y_leaf, _max_v_for("Y_LEAF", 3, 6)))
_register(CatalogEntry(
    "XY_SUCCESSIVE", "eq", _xy_successive, _xy_successive_check,
    lambda g: [{"k": k} for k in range(1, g.v - 1)] or [{"k": 1}],
))
_register(CatalogEntry(
    "V23", "eq", _v23,
    lambda g, p: None if g.v in (2, 3) else "requires exactly 2 or 3 vertices",
))
_register(CatalogEntry(
    "BOUND_V4", "bound", _bound_v4,
    lambda g, p: None if g.v == 4 else "requires exactly 4 vertices",
))
_register(CatalogEntry("BOUND_UP", "bound", _bound_up))
_register(CatalogEntry("BOUND_UPLOW", "bound", _bound_uplow, _min_v(4)))
_register(CatalogEntry("TERM2_PINDEP", "pindep", _pindep("diff")))
_register(CatalogEntry("RARB_PINDEP", "pindep", _pindep("ab")))
_register(CatalogEntry("XY_SUM", "eq", _xy_sum))
_register(CatalogEntry("LEM_RES_SUM", "sweep", _lem_res_sum))
_register(CatalogEntry("CONTRACT_RES", "sweep", _contract_res))
_register(CatalogEntry("EQN2TERM0", "sweep", _eqn2term0))

CATALOG_IDS = tuple(CATALOG)


def verify(g: MetrizedGraph, identity: str, params: dict | None = None,
           tol: float = DEFAULT_TOL) -> IdentityReport:
    """Evaluate one catalog identity on ``g``.

    Raises :class:`PreconditionUnmet` when the graph or parameters fall
    outside the identity's hypotheses.
    """
    try:
        entry = CATALOG[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None
    params = dict(params or {})
    if "p" in params and not 0 <= params["p"] < g.v:
        raise PreconditionUnmet(identity, f"base vertex {params['p']} not in graph")
    reason = entry.check(g, params)
    if reason:
        raise PreconditionUnmet(identity, reason)
    tol = tol if float_mode() else 0
    fp = g.fingerprint
    if entry.kind == "eq":
        left, right = entry.func(g, params)
        return IdentityReport(identity, left, right, values_equal(left, right, tol), fp, params)
    if entry.kind == "bound":
        lower, middle, upper = entry.func(g, params)
        ok = _leq(middle, upper, tol) and (lower is None or _leq(lower, middle, tol))
        return IdentityReport(identity, middle, upper, ok, fp, params,
                              relation="between" if lower is not None else "<=", lower=lower)
    if entry.kind in ("sweep", "sweep3"):
        rows = entry.func(g, params)
        if entry.kind == "sweep3":
            rows = [(key, left, (a, b)) for key, left, (a, b) in rows]
            failed = [row for row in rows
                      if not (values_equal(row[1], row[2][0], tol) and values_equal(row[1], row[2][1], tol))]
        else:
            failed = [row for row in rows if not values_equal(row[1], row[2], tol)]
        shown = failed[0] if failed else (rows[0] if rows else (None, 0, 0))
        witness = {"checked": len(rows), "failed": len(failed), "at": shown[0]}
        return IdentityReport(identity, shown[1], shown[2], not failed, fp, params, witness=witness)
    if entry.kind == "pindep":
        values = entry.func(g, params)
        base = values[0][1]
        odd = [(p, val) for p, val in values if not values_equal(base, val, tol)]
        shown = odd[0] if odd else values[-1]
        witness = {"checked": len(values), "base_vertex": 0, "other_vertex": shown[0]}
        return IdentityReport(identity, base, shown[1], not odd, fp, params, witness=witness)
    raise AssertionError(entry.kind)


def default_param_sets(g: MetrizedGraph, identity: str) -> list[dict]:
    return CATALOG[identity].param_sets(g)


def verify_catalog(g: MetrizedGraph, identities=None, tol: float = DEFAULT_TOL,
                   extra_params: dict | None = None):
    """Run identities on ``g`` in catalog order.

    Yields ``(identity, params, report_or_None, skip_reason_or_None)``.
    """
    for ident in identities or CATALOG_IDS:
        for params in default_param_sets(g, ident):
            params = {**params, **(extra_params or {})}
            try:
                yield ident, params, verify(g, ident, params, tol), None
            except PreconditionUnmet as exc:
                yield ident, params, None, exc.reason


def verify_main2_coefficients(v_min: int = 5, v_max: int = 30) -> list[IdentityReport]:
    """Closed form against the term-by-term coefficient for all valid ``(v, k)``."""
    out = []
    for v in range(v_min, v_max + 1):
        for k in range(1, v - 3):
            a, b = main2_coefficient_sum(v, k), main2_coefficient(v, k)
            out.append(IdentityReport("MAIN2_COEFF", a, b, a == b, "", {"v": v, "k": k}))
    return out


def _catalog_rows(args):
    g, identities, tol, mode = args
    with numeric_mode(mode):
        return list(verify_catalog(g, identities, tol))


def verify_many(graphs, identities=None, tol: float = DEFAULT_TOL, jobs: int = 1,
                mode: str = "exact") -> list[list[tuple]]:
    """``verify_catalog`` over several graphs, one result list per graph, order preserved."""
    tasks = [(g, identities, tol, mode) for g in graphs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_catalog_rows, tasks))
    return [_catalog_rows(t) for t in tasks]
