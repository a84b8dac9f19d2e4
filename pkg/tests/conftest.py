from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from charone import NewtonPolygon, Staircase, gamma

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


coords = st.integers(min_value=-20, max_value=20)
points = st.tuples(coords, coords)


@st.composite
def staircases(draw, max_corners: int = 8, allow_zero: bool = True):
    pts = draw(st.lists(points, min_size=0 if allow_zero else 1, max_size=max_corners))
    return Staircase(pts)


@st.composite
def polygons(draw, max_corners: int = 8, allow_zero: bool = True):
    return gamma(draw(staircases(max_corners=max_corners, allow_zero=allow_zero)))


def random_staircase(rng: random.Random, lo: int = -20, hi: int = 20, max_corners: int = 8, allow_zero: bool = True) -> Staircase:
    k = rng.randint(0 if allow_zero else 1, max_corners)
    return Staircase([(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(k)])


def random_polygon(rng: random.Random, **kw) -> NewtonPolygon:
    return gamma(random_staircase(rng, **kw))


def hull_equal_partner(rng: random.Random, x: Staircase, extra: int = 4, spread: int = 6) -> Staircase:
    """A staircase with the same Newton polygon: extremes, some of x's corners and interior points."""
    ext = gamma(x).extremes
    pts = list(ext) + [c for c in x.corners if rng.random() < 0.5]
    a_lo, a_hi = ext[0][0], ext[-1][0] + spread
    b_lo, b_hi = ext[-1][1], ext[0][1] + spread
    for _ in range(extra):
        p = (rng.randint(a_lo, a_hi), rng.randint(b_lo, b_hi))
        if gamma(Staircase(list(ext) + [p])) == gamma(x):
            pts.append(p)
    return Staircase(pts)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
