"""One test per acceptance criterion; each records a PASS/FAIL line shown in the run summary."""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from conftest import ACCEPTANCE_LINES
from metrigraph import (
    CATALOG_IDS,
    build,
    circle,
    effective_resistance,
    enumerate_free_trees,
    kirchhoff_index,
    path,
    star,
    wiener_index,
    xy_invariants,
)
from metrigraph import inverse_wiener as iw
from metrigraph import kernels
from metrigraph.corpus import random_corpus
from metrigraph.families import BETA_ARITY
from metrigraph.identities import verify_catalog, verify_main2_coefficients
from metrigraph.tree_wiener import (
    beta_closed_form,
    beta_direct,
    wiener_doyle_graver,
    wiener_via_splits,
    wiener_via_triples,
)
from networks import PINNED
from reference_values import F_EXCLUDED, FORBIDDEN_WIENER, G_EXCLUDED


class Outcome:
    def __init__(self):
        self.failures = []
        self.notes = []

    def check(self, cond, message):
        if not cond:
            self.failures.append(message)


@contextmanager
def criterion(number, title, limit=None):
    out = Outcome()
    start = time.perf_counter()
    try:
        yield out
    except Exception as exc:
        out.failures.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        out.failures.append(f"took {elapsed:.2f}s, limit {limit}s")
    timing = f"{elapsed:.2f}s" + (f" / limit {limit}s" if limit is not None else "")
    status = "PASS" if not out.failures else "FAIL"
    detail = "; ".join(out.failures[:3] or out.notes)
    ACCEPTANCE_LINES.append(f"{status} criterion {number}: {title} [{timing}] {detail}".rstrip())
    assert not out.failures, out.failures


def test_criterion_01_kirchhoff_c4():
    with criterion(1, "Kf(unit C4) = 5", limit=1.0) as out:
        out.check(kirchhoff_index(circle(4)) == 5, "Kf(C4) != 5")


def test_criterion_02_cycles():
    with criterion(2, "Kf(C_v) = v(v^2-1)/12 and x = y = (v-1)/2 for v = 3..12") as out:
        for v in range(3, 13):
            g = circle(v)
            out.check(kirchhoff_index(g) == Fraction(v * (v * v - 1), 12), f"Kf(C_{v})")
            half = Fraction(v - 1, 2)
            out.check(xy_invariants(g) == (half, half), f"x, y of C_{v}")


def test_criterion_03_star_path_wiener():
    with criterion(3, "W(S_v), W(P_v) for v = 2..12 and W(P4; a,b,c) on 20 random triples") as out:
        for v in range(2, 13):
            out.check(wiener_index(star(v)) == (v - 1) ** 2, f"W(S_{v})")
            out.check(wiener_index(path(v)) == Fraction(v * (v * v - 1), 6), f"W(P_{v})")
        rng = random.Random(20)
        for _ in range(20):
            a, b, c = (Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(3))
            out.check(wiener_index(path(4, [a, b, c])) == 3 * (a + b + c) + b, f"W(P4; {a}, {b}, {c})")


REQUIRED = ["KC1", "RES_SUM", "TERM2", "KF_TERM2", "MAIN1", "PROP_KF", "RES_CONTRACT", "R_CONTRACT",
            "XY_CONTRACT", "MAIN2", "MK_ORACLE", "V23", "BOUND_V4", "BOUND_UP", "BOUND_UPLOW",
            "TERM2_PINDEP", "XY_SUM"]


def test_criterion_04_identity_catalog():
    with criterion(4, "full identity catalog exact on 200 random multigraphs", limit=300) as out:
        corpus = random_corpus(200, seed=2024, max_v=7, max_e=10)
        out.check(all(g.v <= 7 and g.e <= 10 for g in corpus), "corpus outside v<=7, e<=10")
        out.check(any(g.bridges for g in corpus), "no bridges in corpus")
        out.check(any(e.is_loop for g in corpus for e in g.edges), "no self-loops in corpus")
        out.check(any(len({frozenset((e.u, e.v)) for e in g.edges}) < g.e for g in corpus),
                  "no parallel edges in corpus")
        evaluated = dict.fromkeys(CATALOG_IDS, 0)
        checks = 0
        for g in corpus:
            for ident, params, rep, _ in verify_catalog(g):
                if rep is None:
                    continue
                checks += 1
                evaluated[ident] += 1
                out.check(rep.passed, f"{ident} {params} failed on {g.fingerprint}")
        for ident in REQUIRED:
            out.check(evaluated[ident] > 0, f"{ident} never evaluated")
        out.notes.append(f"{checks} exact checks")


def test_criterion_05_four_way_trees():
    with criterion(5, "four-way Wiener agreement on all unit trees with v <= 10", limit=60) as out:
        count = 0
        for v in range(1, 11):
            for t in enumerate_free_trees(v):
                count += 1
                w = wiener_index(t)
                out.check(wiener_via_splits(t) == wiener_via_triples(t) == wiener_doyle_graver(t) == w,
                          f"disagreement on {t.edges}")
        out.check(count == 201, f"expected 201 trees, got {count}")
        out.notes.append(f"{count} trees")


def test_criterion_06_beta_closed_forms():
    with criterion(6, "beta1..beta6 closed forms match direct computation on the grid") as out:
        for which, arity in sorted(BETA_ARITY.items()):
            top = 2 if which == "beta6" else 3
            for params in itertools.product(range(top + 1), repeat=arity):
                out.check(beta_closed_form(which, params) == beta_direct(which, params), f"{which}{params}")


def test_criterion_07a_excluded_600():
    with criterion("7a", "F and G excluded lists at bound 600 (89 and 104 numbers)", limit=60) as out:
        f, g = iw.excluded_integers("F", 600), iw.excluded_integers("G", 600)
        out.check(f == F_EXCLUDED, f"F list differs ({len(f)} numbers)")
        out.check(g == G_EXCLUDED, f"G list differs ({len(g)} numbers)")


def test_criterion_07b_excluded_5000():
    with criterion("7b", "no further F or G exclusions up to 5000", limit=600) as out:
        out.check(iw.excluded_integers("F", 5000) == F_EXCLUDED, "F has new exclusions below 5000")
        out.check(iw.excluded_integers("G", 5000) == G_EXCLUDED, "G has new exclusions below 5000")
        out.notes.append(f"{kernels.BACKEND} kernels")


def test_criterion_08_forbidden_wiener():
    with criterion(8, "forbidden_wiener(160) gives the 49 numbers via trees up to v = 13", limit=60) as out:
        out.check(iw.trees_needed(160) == 13, "enumeration depth is not 13")
        out.check(iw.forbidden_wiener(160) == FORBIDDEN_WIENER, "forbidden list differs")


def test_criterion_09_main2_coefficient():
    with criterion(9, "MAIN2 coefficient identity for 5 <= v <= 30, 1 <= k <= v-4") as out:
        reps = verify_main2_coefficients(5, 30)
        out.check(len(reps) == sum(v - 4 for v in range(5, 31)), "wrong number of (v, k) pairs")
        for r in reps:
            out.check(r.passed, f"v={r.params['v']} k={r.params['k']}")


def test_criterion_10_series_parallel():
    with criterion(10, "Laplacian resistance equals hand series-parallel reduction on 10 networks") as out:
        out.check(len(PINNED) == 10, "need exactly 10 pinned networks")
        for name, n, edges, (s, t), expected in PINNED:
            out.check(effective_resistance(build(n, edges), s, t) == expected, name)
