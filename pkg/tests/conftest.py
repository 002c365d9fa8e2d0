import time
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from multitile.errors import DegenerateInput
from multitile.exactgeom import polygon_from_vertices
from multitile.io import load_polytope_file

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def fixture_body(stem):
    return load_polytope_file(FIXTURES / f"{stem}.json").polytope


def fractions(lo=-2, hi=2, max_den=6):
    return st.integers(1, max_den).flatmap(
        lambda d: st.integers(lo * d, hi * d).map(lambda n: Fraction(n, d)))


@st.composite
def rational_polygons(draw, max_den=6, min_points=3, max_points=7):
    pts = draw(st.lists(st.tuples(fractions(max_den=max_den), fractions(max_den=max_den)),
                        min_size=min_points, max_size=max_points))
    try:
        return polygon_from_vertices(pts)
    except DegenerateInput:
        from hypothesis import assume

        assume(False)


@st.composite
def unimodular_2x2(draw):
    # products of elementary shears and sign flips
    M = ((1, 0), (0, 1))
    for _ in range(draw(st.integers(0, 4))):
        k = draw(st.integers(-2, 2))
        E = draw(st.sampled_from([((1, k), (0, 1)), ((1, 0), (k, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, 1))]))
        M = tuple(tuple(sum(E[i][t] * M[t][j] for t in range(2)) for j in range(2)) for i in range(2))
    return M


# acceptance reporting -------------------------------------------------------

ACCEPTANCE: dict = {}


class Criterion:
    """Context manager recording pass/fail and wall time of one criterion."""

    def __init__(self, number, title, limit, part=""):
        self.number, self.title, self.limit, self.part = number, title, limit, part

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        note = "" if elapsed < self.limit else f" (over the {self.limit:g} s limit)"
        ACCEPTANCE[(self.number, self.part)] = (ok, f"{self.title}: {elapsed:.2f} s{note}")
        if exc_type is None and not ok:
            raise AssertionError(f"criterion {self.number} took {elapsed:.2f} s, limit {self.limit:g} s")
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, part in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[(n, part)]
        label = f"{n}{part}"
        terminalreporter.write_line(f"criterion {label:<4} {'PASS' if ok else 'FAIL'}  {text}")
