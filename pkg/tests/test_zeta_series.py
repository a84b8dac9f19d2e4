from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.polynomial import Polynomial

from charone.errors import DivergenceError
from charone.zeta import hasse_weil_Z, soule_F, zeta_log_derivative


def test_hasse_weil_closed_forms():
    for q, T in ((2.0, 0.3), (3.0, -0.2), (1.5, 0.5), (5.0, 0.19)):
        got = hasse_weil_Z(q, T, lambda x: x + 1)
        exact = 1 / ((1 - T) * (1 - q * T))
        # q = 5 runs into float overflow of q^r first and stops with a larger tail bound
        assert abs(got.value - exact) <= max(got.tail_bound, 1e-13 * exact)
        assert hasse_weil_Z(q, T, lambda x: np.ones_like(x)).value == pytest.approx(1 / (1 - T), rel=1e-13)
        assert hasse_weil_Z(q, T, lambda x: 0 * x).value == 1.0


def test_hasse_weil_divergence_and_domain():
    with pytest.raises(DivergenceError):
        hasse_weil_Z(2.0, 0.6, lambda x: x + 1)
    with pytest.raises(ValueError):
        hasse_weil_Z(0.5, 0.1, lambda x: x)


def test_hasse_weil_scalar_only_counting_function():
    # a counting function written for scalars is evaluated point by point
    got = hasse_weil_Z(2.0, 0.1, lambda x: float(x) + 1)
    assert got.value == pytest.approx(1 / (0.9 * 0.8), rel=1e-13)


def soule_closed_form(q, s):
    # log q * sum_r q^(r(1-s)) for N(u) = u
    x = q ** (1 - s)
    return math.log(q) * x / (1 - x)


@pytest.mark.parametrize("q", [1.1, 1.01, 1.001])
def test_soule_closed_form(q):
    got = soule_F(q, 2, lambda u: u)
    assert got.value == pytest.approx(soule_closed_form(q, 2), rel=1e-10)


def test_soule_limits():
    values = [soule_F(q, 2, lambda u: u).value for q in (1.1, 1.01, 1.001)]
    assert abs(values[-1] - 1) < 1e-3
    assert abs(soule_F(1.0001, 3, lambda u: u).value - 0.5) < 1e-3
    assert soule_F(1.01, 2, lambda u: 0 * u).value == 0.0
    with pytest.raises(DivergenceError):
        soule_F(1.1, 0.5, lambda u: u)


@pytest.mark.parametrize("N, coeffs", [(lambda u: u, [0, 1]), (lambda u: u + 1, [1, 1])])
@pytest.mark.parametrize("s", [2, 3])
def test_soule_approaches_log_derivative_monotonically(N, coeffs, s):
    target = zeta_log_derivative(coeffs, s).value
    gaps = [abs(soule_F(q, s, N).value - target) for q in (1.1, 1.03, 1.01, 1.003, 1.001)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 2e-3


@pytest.mark.parametrize("s", [2, 3, 5])
def test_log_derivative_projective_line(s):
    assert zeta_log_derivative([1, 1], s).value == pytest.approx(1 / (s - 1) + 1 / s, abs=1e-12)
    assert zeta_log_derivative(Polynomial([1, 1]), s).value == pytest.approx(1 / (s - 1) + 1 / s, abs=1e-12)


def test_log_derivative_examples():
    assert zeta_log_derivative([0, 1], 2).value == pytest.approx(1.0, abs=1e-13)
    assert zeta_log_derivative([0], 2).value == 0.0
    # int_1^inf u^2 u^-5 du/u = 1/3
    assert zeta_log_derivative([0, 0, 1], 5).value == pytest.approx(1 / 3, abs=1e-13)
    with pytest.raises(DivergenceError):
        zeta_log_derivative([1, 1], 1)


def test_log_derivative_general_callable():
    got = zeta_log_derivative(lambda u: u + 1, 3, growth=1)
    assert abs(got.value - (0.5 + 1 / 3)) <= max(got.tail_bound, 1e-10)
    with pytest.raises(ValueError):
        zeta_log_derivative(lambda u: u, 3)
    with pytest.raises(DivergenceError):
        zeta_log_derivative(lambda u: u, 1, growth=1)
