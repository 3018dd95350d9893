"""Named graph families: circles, paths, stars and the trees beta1..beta6.

The beta trees are built from a small core with pendant leaves hung on core
vertices; the parameter names follow the order ``s, t, k, m, n, h``.

beta1: an edge ``a-b``; ``s`` leaves on ``a``, ``t`` leaves on ``b``.
beta2: a path ``a-c-b``; ``s`` leaves on ``a``, ``t`` leaves on ``b``.
beta3: a centre ``c`` joined to ``a``, ``b``, ``d``; ``s``, ``t``, ``k`` leaves on them.
beta4: beta3 plus ``m`` leaves on the centre.
beta5: beta4 plus a vertex ``w`` attached to ``b`` carrying ``n`` leaves.
beta6: beta4 plus two vertices ``w``, ``z`` attached to ``b`` carrying ``n`` and ``h`` leaves.
"""

from __future__ import annotations

from typing import Sequence

from .graph import BadParams, MetrizedGraph, build

BETA_ARITY = {"beta1": 2, "beta2": 2, "beta3": 3, "beta4": 4, "beta5": 5, "beta6": 6}

# core vertex count, core edges, and the core vertex each parameter hangs leaves on
_BETA_CORES = {
    "beta1": (2, [(0, 1)], [0, 1]),
    "beta2": (3, [(0, 2), (2, 1)], [0, 1]),
    "beta3": (4, [(0, 1), (0, 2), (0, 3)], [1, 2, 3]),
    "beta4": (4, [(0, 1), (0, 2), (0, 3)], [1, 2, 3, 0]),
    "beta5": (5, [(0, 1), (0, 2), (0, 3), (2, 4)], [1, 2, 3, 0, 4]),
    "beta6": (6, [(0, 1), (0, 2), (0, 3), (2, 4), (2, 5)], [1, 2, 3, 0, 4, 5]),
}


def _lengths(count: int, lengths) -> list:
    if lengths is None or lengths == "unit":
        return [1] * count
    lengths = list(lengths)
    if len(lengths) != count:
        raise BadParams(f"expected {count} edge lengths, got {len(lengths)}")
    return lengths


def circle(v: int, lengths: Sequence | None = None) -> MetrizedGraph:
    """Cycle on ``v`` vertices; ``v=1`` is a self-loop, ``v=2`` two parallel edges."""
    if v < 1:
        raise BadParams("circle needs v >= 1")
    ls = _lengths(v, lengths)
    return build(v, [(i, (i + 1) % v, ls[i]) for i in range(v)])


def path(v: int, lengths: Sequence | None = None) -> MetrizedGraph:
    if v < 1:
        raise BadParams("path needs v >= 1")
    ls = _lengths(v - 1, lengths)
    return build(v, [(i, i + 1, ls[i]) for i in range(v - 1)])


def star(v: int, lengths: Sequence | None = None) -> MetrizedGraph:
    """Star with centre 0 and ``v - 1`` leaves."""
    if v < 1:
        raise BadParams("star needs v >= 1")
    ls = _lengths(v - 1, lengths)
    return build(v, [(0, i, ls[i - 1]) for i in range(1, v)])


def beta(which: str, params: Sequence[int], lengths: Sequence | None = None) -> MetrizedGraph:
    if which not in _BETA_CORES:
        raise BadParams(f"unknown family {which!r}")
    params = list(params)
    if len(params) != BETA_ARITY[which]:
        raise BadParams(f"{which} takes {BETA_ARITY[which]} parameters, got {len(params)}")
    if any(not isinstance(x, int) or x < 0 for x in params):
        raise BadParams(f"{which} parameters must be nonnegative integers: {params}")
    ncore, core, hooks = _BETA_CORES[which]
    pairs = list(core)
    nxt = ncore
    for hook, count in zip(hooks, params):
        for _ in range(count):
            pairs.append((hook, nxt))
            nxt += 1
    ls = _lengths(len(pairs), lengths)
    return build(nxt, [(a, b, ell) for (a, b), ell in zip(pairs, ls)])


def make_family(kind: str, params: Sequence[int] = (), lengths=None) -> MetrizedGraph:
    """Dispatch on ``kind``: ``circle``/``path``/``star`` take ``[v]``, ``beta1``..``beta6`` their own arity."""
    params = list(params)
    if kind in ("circle", "path", "star"):
        if len(params) != 1:
            raise BadParams(f"{kind} takes exactly one parameter (vertex count)")
        return {"circle": circle, "path": path, "star": star}[kind](params[0], lengths)
    return beta(kind, params, lengths)
