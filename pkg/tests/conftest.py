import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from metrigraph import build  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

lengths = st.builds(Fraction, st.integers(1, 16), st.integers(1, 16))


@st.composite
def multigraphs(draw, min_v=1, max_v=6, max_extra=4, loops=True, trees_only=False):
    """Connected multigraph: random spanning tree plus loops, parallel and chord edges."""
    v = draw(st.integers(min_v, max_v))
    pairs = [(draw(st.integers(0, x - 1)), x) for x in range(1, v)]
    if not trees_only:
        for _ in range(draw(st.integers(0, max_extra))):
            a = draw(st.integers(0, v - 1))
            b = draw(st.integers(0, v - 1))
            if a == b and not loops:
                continue
            pairs.append((a, b))
    perm = draw(st.permutations(range(v)))
    return build(v, [(perm[a], perm[b], draw(lengths)) for a, b in pairs])


@pytest.fixture
def c4():
    from metrigraph import circle

    return circle(4)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
