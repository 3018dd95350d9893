"""Integers attained by the F and G polynomials, and the tree Wiener spectrum.

F and G are the Wiener indices of the unit trees beta5 and beta6 as
polynomials in their leaf counts.  Values up to a bound are enumerated by
nested loops that stop at the first value past the bound, which is valid
because both polynomials increase strictly in every argument.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

from . import kernels
from .freetrees import MAX_TREE_VERTICES, free_tree_level_sequences, parents_from_levels
from .graph import BadParams

DEFAULT_BOUND = 5000
EXTENDED_BOUND = 20000
DEFAULT_BUDGET = 10**10
POLYS = {"F": kernels.POLY_F, "G": kernels.POLY_G}
ARITY = {"F": 5, "G": 6}
# grid upper corner used for the monotonicity check before enumeration
MONOTONE_GRID = {"F": 3, "G": 2}


class BoundTooLargeForBudget(ValueError):
    pass


class BoundNeedsLargerTrees(ValueError):
    pass


class EnumerationIntegrityError(AssertionError):
    pass


def _nonneg(args, arity):
    if len(args) != arity or any(not isinstance(a, int) or a < 0 for a in args):
        raise BadParams(f"expected {arity} nonnegative integers, got {args}")


def f_value(s, t, k, m, n) -> int:
    _nonneg((s, t, k, m, n), 5)
    return kernels.f_poly(s, t, k, m, n)


def g_value(s, t, k, m, n, h) -> int:
    _nonneg((s, t, k, m, n, h), 6)
    return kernels.g_poly(s, t, k, m, n, h)


def poly_value(poly: str, args) -> int:
    return (f_value if _poly_name(poly) == "F" else g_value)(*args)


def _poly_name(poly) -> str:
    name = str(poly).upper()
    if name not in POLYS:
        raise BadParams(f"unknown polynomial {poly!r}; expected F or G")
    return name


def check_monotone(poly: str, top: int | None = None) -> None:
    """Raise unless every unit step in every coordinate increases the value on ``[0, top]^arity``."""
    name = _poly_name(poly)
    top = MONOTONE_GRID[name] if top is None else top
    arity = ARITY[name]
    fn = kernels.f_poly if name == "F" else kernels.g_poly
    for point in itertools.product(range(top + 1), repeat=arity):
        base = fn(*point)
        for i in range(arity):
            step = list(point)
            step[i] += 1
            if fn(*step) <= base:
                raise EnumerationIntegrityError(
                    f"{name} is not increasing in argument {i} at {point}; loop pruning is unsound")


@dataclass
class AttainedSet:
    """Which integers in ``[0, bound]`` a source attains, with one witness each."""

    bound: int
    bits: bytearray
    source: str
    witnesses: dict = field(default_factory=dict)

    def attained(self, w: int) -> bool:
        return 0 <= w <= self.bound and bool(self.bits[w])

    def excluded(self) -> list[int]:
        return [w for w in range(1, self.bound + 1) if not self.bits[w]]

    def restrict(self, bound: int) -> "AttainedSet":
        if bound > self.bound:
            raise ValueError("cannot extend an attained set")
        wit = {w: x for w, x in self.witnesses.items() if w <= bound}
        return AttainedSet(bound, bytearray(self.bits[:bound + 1]), self.source, wit)


def _s_limit(which: int, bound: int) -> int:
    fn = kernels.f_poly if which == kernels.POLY_F else kernels.g_poly
    arity = 5 if which == kernels.POLY_F else 6
    s = 0
    while fn(s, *([0] * (arity - 1))) <= bound:
        s += 1
    return s


def _run_chunk(args):
    which, bound, lo, hi, budget = args
    return kernels.poly_attained(which, bound, lo, hi, budget)


def _chunks(s_max: int, jobs: int) -> list[tuple[int, int]]:
    # small s carry most of the work, so use many narrow chunks
    pieces = max(1, min(s_max, 4 * jobs))
    cuts = sorted({round(s_max * (i / pieces) ** 2) for i in range(pieces + 1)} | {0, s_max})
    return [(a, b) for a, b in zip(cuts, cuts[1:]) if b > a]


def poly_attained_set(poly: str, bound: int, budget: int = DEFAULT_BUDGET,
                      jobs: int = 1) -> AttainedSet:
    """Every value of F or G up to ``bound``, with the lexicographically first witness."""
    name = _poly_name(poly)
    if not isinstance(bound, int) or bound < 1:
        raise BadParams("bound must be a positive integer")
    check_monotone(name)
    which = POLYS[name]
    arity = ARITY[name]
    s_max = _s_limit(which, bound)
    parts = _chunks(s_max, jobs) if jobs > 1 else [(0, s_max)]
    tasks = [(which, bound, lo, hi, budget) for lo, hi in parts]
    try:
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_chunk, tasks))
        else:
            results = [_run_chunk(t) for t in tasks]
    except kernels.BudgetExceeded as exc:
        raise BoundTooLargeForBudget(
            f"{name} enumeration to {bound} exceeded the budget of {budget} evaluations") from exc
    if sum(r[2] for r in results) > budget:
        raise BoundTooLargeForBudget(
            f"{name} enumeration to {bound} exceeded the budget of {budget} evaluations")
    bits = bytearray(bound + 1)
    witnesses = {}
    # chunks are ordered by s, so the first chunk to hit a value holds its first witness
    for attained, wit, _ in results:
        for w in range(bound + 1):
            if attained[w] and not bits[w]:
                bits[w] = 1
                witnesses[w] = tuple(wit[6 * w:6 * w + arity])
    result = AttainedSet(bound, bits, name, witnesses)
    _guard(result, lambda args: poly_value(name, args))
    return result


def _guard(result: AttainedSet, evaluate) -> None:
    for w in range(result.bound + 1):
        if result.bits[w] and evaluate(result.witnesses[w]) != w:
            raise EnumerationIntegrityError(f"witness for {w} evaluates to {evaluate(result.witnesses[w])}")


def excluded_integers(poly: str, bound: int, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[int]:
    return poly_attained_set(poly, bound, budget, jobs).excluded()


def trees_needed(bound: int) -> int:
    """Largest vertex count a tree with Wiener index at most ``bound`` can have."""
    # a tree on v vertices has Wiener index at least (v-1)^2
    return isqrt(bound) + 1


def _levels_edges(levels) -> list[list[int]]:
    parent = parents_from_levels(levels)
    return [[parent[i], i] for i in range(1, len(levels))]


def tree_spectrum(n: int) -> dict[int, list[int]]:
    """Distinct Wiener indices of unit trees on ``n`` vertices, each with one level sequence."""
    out: dict[int, list[int]] = {}
    for levels in free_tree_level_sequences(n):
        out.setdefault(kernels.wiener_from_levels(levels), levels)
    return dict(sorted(out.items()))


def wiener_attained_set(bound: int, max_vertices: int = MAX_TREE_VERTICES) -> AttainedSet:
    if not isinstance(bound, int) or bound < 1:
        raise BadParams("bound must be a positive integer")
    need = trees_needed(bound)
    if need > min(max_vertices, MAX_TREE_VERTICES):
        raise BoundNeedsLargerTrees(
            f"bound {bound} needs trees with up to {need} vertices; the cap is "
            f"{min(max_vertices, MAX_TREE_VERTICES)}")
    bits = bytearray(bound + 1)
    witnesses = {}
    for n in range(1, need + 1):
        for levels in free_tree_level_sequences(n):
            w = kernels.wiener_from_levels(levels)
            if w <= bound and not bits[w]:
                bits[w] = 1
                witnesses[w] = list(levels)
    result = AttainedSet(bound, bits, "tree-spectrum", witnesses)
    _guard(result, kernels.wiener_from_levels)
    return result


def forbidden_wiener(bound: int, max_vertices: int = MAX_TREE_VERTICES) -> list[int]:
    return wiener_attained_set(bound, max_vertices).excluded()


def excluded_report(poly: str, bound: int, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                    samples: int = 10) -> dict:
    """JSON-ready result; witnesses cover the first attained values past the last exclusion."""
    res = poly_attained_set(poly, bound, budget, jobs)
    excluded = res.excluded()
    start = (excluded[-1] if excluded else 0) + 1
    sample = range(start, min(bound, start + samples - 1) + 1)
    return {
        "poly": res.source,
        "bound": bound,
        "count": len(excluded),
        "excluded": excluded,
        "witnesses": {str(w): list(res.witnesses[w]) for w in sample if res.bits[w]},
    }


def forbidden_report(bound: int, max_vertices: int = MAX_TREE_VERTICES) -> dict:
    res = wiener_attained_set(bound, max_vertices)
    forbidden = res.excluded()
    return {
        "bound": bound,
        "max_vertices": trees_needed(bound),
        "count": len(forbidden),
        "forbidden_wiener": forbidden,
        "witnesses": {str(w): _levels_edges(res.witnesses[w])
                      for w in range(1, bound + 1) if res.bits[w]},
    }
