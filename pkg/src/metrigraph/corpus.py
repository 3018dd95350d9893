"""Seeded random multigraphs for identity sweeps."""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import MetrizedGraph, build


def random_length(rng: random.Random, max_part: int = 16) -> Fraction:
    return Fraction(rng.randint(1, max_part), rng.randint(1, max_part))


def random_multigraph(rng: random.Random, max_v: int = 7, max_e: int = 10,
                      min_v: int = 2, max_part: int = 16) -> MetrizedGraph:
    """Random connected multigraph: a random spanning tree plus extra edges.

    Extra edges are ordinary edges, parallel copies or self-loops with roughly
    equal odds, so bridges, loops and multi-edges all show up.
    """
    v = rng.randint(min_v, max_v)
    e = rng.randint(max(v - 1, 1), max(max_e, v - 1))
    pairs = [(rng.randrange(x), x) for x in range(1, v)]
    while len(pairs) < e:
        kind = rng.random()
        if kind < 0.2:
            x = rng.randrange(v)
            pairs.append((x, x))
        elif kind < 0.45 and pairs:
            pairs.append(rng.choice(pairs))
        elif v > 1:
            a, b = rng.sample(range(v), 2)
            pairs.append((a, b))
        else:
            pairs.append((0, 0))
    rng.shuffle(pairs)
    # shuffle vertex names so the spanning tree is not always rooted at 0
    perm = list(range(v))
    rng.shuffle(perm)
    return build(v, [(perm[a], perm[b], random_length(rng, max_part)) for a, b in pairs])


def random_corpus(count: int, seed: int, **kwargs) -> list[MetrizedGraph]:
    rng = random.Random(seed)
    return [random_multigraph(rng, **kwargs) for _ in range(count)]
