"""Hasse-Weil type series for a counting function N and their q -> 1 limit."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import Polynomial

from ..errors import DivergenceError
from .quadrature import integrate

CountingFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class SeriesResult:
    value: float
    tail_bound: float
    terms: int


def _evaluate(N: CountingFunction, x: np.ndarray) -> np.ndarray:
    try:
        y = np.asarray(N(x), dtype=float)
        if y.shape == x.shape:
            return y
    except (TypeError, ValueError):
        pass
    return np.array([float(N(v)) for v in x])


def _sum_series(term_block: Callable[[np.ndarray], np.ndarray], *, tol: float, max_terms: int) -> SeriesResult:
    """Sum a_1 + a_2 + ... with a geometric tail bound; diverging terms raise."""
    partial: list[float] = []
    start = 1
    first = None
    chunk = 16
    while start <= max_terms:
        r = np.arange(start, min(start + chunk, max_terms + 1), dtype=float)
        chunk = min(2 * chunk, 1 << 16)
        with np.errstate(over="ignore", invalid="ignore"):
            a = term_block(r)
        overflow = not np.all(np.isfinite(a))
        if overflow:
            # N(q^r) left the float range; keep the finite prefix and stop with its tail bound
            bad = int(np.argmin(np.isfinite(a)))
            if bad < 2:
                raise DivergenceError("series terms overflow")
            a, r = a[:bad], r[:bad]
        partial.append(math.fsum(a))
        if first is None:
            first = max(abs(a[0]), 1e-300)
        mags = np.abs(a)
        if mags[-1] > 1e6 * first:
            raise DivergenceError(f"series terms grow: |a_{int(r[-1])}| = {mags[-1]:.3g}")
        last, prev = mags[-1], mags[-2] if len(mags) > 1 else mags[-1]
        total = math.fsum(partial)
        if last == 0:
            return SeriesResult(total, 0.0, int(r[-1]))
        ratio = last / prev if prev else 0.0
        if ratio < 1:
            # doubled: ratios that still creep upward (x^r / r) make the plain geometric tail optimistic
            tail = 2 * last * ratio / (1 - ratio)
            if overflow or tail <= tol * max(abs(total), 1e-300):
                return SeriesResult(total, float(tail), int(r[-1]))
        if overflow:
            raise DivergenceError("series terms overflow before the terms decay")
        start = int(r[-1]) + 1
    raise DivergenceError(f"series not converged after {max_terms} terms")


def hasse_weil_Z(q: float, T: float, N: CountingFunction, *, tol: float = 1e-15, max_terms: int = 10**6) -> SeriesResult:
    """Z(q, T) = exp(sum_{r >= 1} N(q^r) T^r / r), q > 1."""
    if not q > 1:
        raise ValueError("the finite-field convention needs q > 1")
    if T == 0:
        return SeriesResult(1.0, 0.0, 0)

    def block(r):
        return _evaluate(N, q**r) * T**r / r

    s = _sum_series(block, tol=tol, max_terms=max_terms)
    value = math.exp(s.value)
    return SeriesResult(value, value * math.expm1(s.tail_bound), s.terms)


def soule_F(q: float, s: float, N: CountingFunction, *, tol: float = 1e-15, max_terms: int = 10**7) -> SeriesResult:
    """F(q, s) = -d/ds sum_r N(q^r) q^(-rs)/r = log q * sum_r N(q^r) q^(-rs), q > 1."""
    if not q > 1:
        raise ValueError("q must exceed 1")
    lq = math.log(q)

    def block(r):
        return _evaluate(N, q**r) * np.exp(-s * r * lq) * lq

    return _sum_series(block, tol=tol, max_terms=max_terms)


def zeta_log_derivative(N, s: float, *, growth: float | None = None, cutoff: float = 10.0, tol: float = 1e-13) -> SeriesResult:
    """int_1^inf N(u) u^(-s) d*u, i.e. -d/ds log zeta_N(s).

    For a polynomial N (numpy Polynomial or coefficient list) the integral over
    [1, cutoff] is numerical and the tail sum_k c_k cutoff^(k-s)/(s-k) exact.
    A general callable needs ``growth`` with |N(u)| <= C u^growth; its tail is
    estimated from N(cutoff) and reported as the bound.
    """
    if isinstance(N, (list, tuple)):
        N = Polynomial(N)
    if isinstance(N, Polynomial):
        coef = N.coef
        nz = np.nonzero(coef)[0]
        if len(nz) == 0:
            return SeriesResult(0.0, 0.0, 0)
        degree = int(nz[-1])
        if s <= degree:
            raise DivergenceError(f"int N(u) u^(-s) d*u diverges for s = {s} <= deg N = {degree}")
        head = integrate(lambda t: N(np.exp(t)) * np.exp(-s * t), 0.0, math.log(cutoff), abs_tol=tol, rel_tol=tol)
        tail = math.fsum(c * cutoff ** (k - s) / (s - k) for k, c in enumerate(coef) if c)
        return SeriesResult(float(head.value) + tail, head.error, 0)
    if growth is None:
        raise ValueError("a growth exponent is required for non-polynomial N")
    if s <= growth:
        raise DivergenceError(f"int N(u) u^(-s) d*u diverges for s = {s} <= growth {growth}")
    # integrate until the tail bound C U^(growth-s)/(s-growth) is below tol
    scale = abs(float(_evaluate(N, np.array([cutoff]))[0])) / cutoff**growth + 1e-300
    upper = cutoff
    while scale * upper ** (growth - s) / (s - growth) > tol and upper < 1e300:
        upper *= 10
    head = integrate(lambda t: _evaluate(N, np.exp(t)) * np.exp(-s * t), 0.0, math.log(upper), panels=64, abs_tol=tol, rel_tol=tol)
    bound = head.error + scale * upper ** (growth - s) / (s - growth)
    return SeriesResult(float(head.value), bound, 0)
