import pytest
from hypothesis import HealthCheck, settings, strategies as st

from affinejt.exactalg import VarSet

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=8, max_part=None, max_length=None):
    m = draw(st.integers(0, max_size))
    parts = []
    cap = max_part or m
    while m > 0 and (max_length is None or len(parts) < max_length):
        p = draw(st.integers(1, min(m, cap)))
        parts.append(p)
        m -= p
        cap = min(cap, p)
    return tuple(sorted(parts, reverse=True))


@st.composite
def laurent_polys(draw, vs, max_terms=6, lo=-3, hi=3, negative=True):
    n = vs.nvars
    low = lo if negative else 0
    terms = draw(st.lists(
        st.tuples(st.lists(st.integers(low, hi), min_size=n, max_size=n), st.integers(-9, 9)),
        max_size=max_terms,
    ))
    return vs.from_terms(terms)


@pytest.fixture
def xt2():
    return VarSet(("x1", "x2", "T"))


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
