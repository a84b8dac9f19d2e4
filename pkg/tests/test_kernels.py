from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charone import _kernels_py, kernels

BACKENDS = kernels.available_backends()
compiled = pytest.mark.skipif("compiled" not in BACKENDS, reason="compiled kernels not built")

pts = st.lists(st.tuples(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6)), max_size=30)


def dominance_oracle(points):
    """Minimal antichain by the definition: drop every point dominated by another."""
    uniq = set(points)
    keep = [p for p in uniq if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in uniq)]
    return sorted(keep)


@given(pts)
def test_python_canonicalize_matches_dominance_oracle(points):
    assert _kernels_py.canonicalize(points) == dominance_oracle(points)


@compiled
@given(pts)
def test_backends_agree_on_canonicalize(points):
    from charone import _kernels

    assert _kernels.canonicalize(points) == _kernels_py.canonicalize(points)


@compiled
@given(pts, pts)
def test_backends_agree_on_products_and_hulls(xs, ys):
    from charone import _kernels

    xs, ys = _kernels_py.canonicalize(xs), _kernels_py.canonicalize(ys)
    assert _kernels.staircase_mul(xs, ys) == _kernels_py.staircase_mul(xs, ys)
    hx, hy = _kernels_py.lower_hull(xs), _kernels_py.lower_hull(ys)
    assert _kernels.lower_hull(xs) == hx
    if hx and hy:
        assert _kernels.polygon_mul(hx, hy) == _kernels_py.polygon_mul(hx, hy)


@compiled
def test_dispatch_falls_back_for_large_coordinates():
    big = [(2**40, 0), (0, 2**40), (2**62, -(2**62))]
    with kernels.use_backend("compiled"):
        assert kernels.canonicalize(big) == dominance_oracle(big)
        prod = kernels.staircase_mul(big, big)
    assert prod == _kernels_py.staircase_mul(big, big)
    assert (2**63, -(2**63)) in prod  # would overflow int64


def test_use_backend_restores_previous():
    before = kernels.current_backend()
    with kernels.use_backend("python"):
        assert kernels.current_backend() == "python"
    assert kernels.current_backend() == before
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


@pytest.mark.parametrize("backend", BACKENDS)
def test_library_results_identical_across_backends(backend):
    from charone import Staircase, gamma

    rng = random.Random(7)
    results = []
    with kernels.use_backend(backend):
        for _ in range(200):
            x = Staircase([(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(rng.randint(1, 8))])
            y = Staircase([(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(rng.randint(1, 8))])
            results.append(((x * y).corners, (x + y).corners, (gamma(x) * gamma(y)).extremes))
    with kernels.use_backend("python"):
        rng = random.Random(7)
        for expected in results:
            x = Staircase([(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(rng.randint(1, 8))])
            y = Staircase([(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(rng.randint(1, 8))])
            assert ((x * y).corners, (x + y).corners, (gamma(x) * gamma(y)).extremes) == expected
