from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charone import (
    DeformedCorrespondence,
    ExponentVec,
    GermExponent,
    NotRecoverable,
    ReducedCorrespondence,
    Surd,
    UnsupportedComposition,
    UnsupportedSlopeProduct,
    compose,
    dedekind_cut,
    dedekind_cut_bounded,
    germ_add,
    germ_mul,
    identity_eps,
    make_correspondence,
    make_slope,
    parse_slope,
    presentation,
    recover_pair,
    span_reduce,
)
from charone.correspondences import conductor, numerical_semigroup, same_correspondence


def psi(text: str) -> ReducedCorrespondence:
    return make_correspondence(parse_slope(text))


def test_make_correspondence_examples():
    two = psi("2")
    assert two.value(two.left_image(1)) == Surd.rational(2)
    assert two.value(two.right_image(1)) == Surd.rational(1)
    one = psi("1")
    assert one.value(one.left) == one.value(one.right)
    r2 = psi("sqrt2")
    assert (r2.left, r2.right) == (ExponentVec(1, 0), ExponentVec(0, 1))
    assert r2.compare(r2.left, r2.right) == 1


def test_actions_shift_exponents():
    c = psi("sqrt3")
    alpha = ExponentVec(2, 5)
    assert c.act_left(alpha, 3) == ExponentVec(5, 5)
    assert c.act_right(alpha, 3) == ExponentVec(2, 8)
    assert c.value(c.act_left(alpha, 3)) == c.value(alpha) + 3 * Surd.sqrt(3)


def test_compose_examples():
    r = compose(psi("2"), psi("3"))
    assert r.kind == "psi" and r.slope == make_slope(6)
    r = compose(psi("sqrt2"), psi("sqrt3"))
    assert r.kind == "psi" and r.slope == make_slope(Surd.sqrt(6))
    r = compose(psi("sqrt2"), psi("sqrt(2)/2"))
    assert isinstance(r, DeformedCorrespondence) and r.kind == "id-eps"
    assert r == identity_eps()
    assert r.left.eps != 0 and r.right.eps == 0
    r = compose(psi("sqrt2"), psi("sqrt8"))
    assert r.kind == "id-eps-psi" and r.alpha == 4
    assert r.left == GermExponent(Fraction(4), Fraction(4)) and r.right == GermExponent(Fraction(1), Fraction(0))


def test_deformed_result_at_eps_zero_has_plain_generators():
    r = compose(psi("sqrt2"), psi("sqrt8"))
    base = r.at_zero()
    assert r.left.at_zero() == 4 and base.value(base.left) == Surd.rational(4)
    assert r.left.eps != 0


def test_mixed_rational_irrational_composition_is_plain():
    r = compose(psi("sqrt2"), psi("3/5"))
    assert r.kind == "psi" and r.slope.exact() == Surd.sqrt(2, Fraction(3, 5))
    # lambda*lambda' in Q*lambda' + Q but irrational: plain Psi
    r = compose(psi("quadratic:1,1,1,2"), psi("sqrt2"))
    assert r.kind == "psi" and r.slope.exact() == Surd.rational(2) + Surd.sqrt(2)


def test_compose_refuses_truncated_and_chained():
    with pytest.raises(UnsupportedSlopeProduct):
        compose(psi("cf:1,2,2,2"), psi("2"))
    assert compose(psi("cf-exact:1,2"), psi("2")).slope == make_slope(3)
    with pytest.raises(UnsupportedComposition):
        compose(compose(psi("sqrt2"), psi("sqrt8")), psi("2"))


def _rand_rational(rng):
    return Fraction(rng.randint(1, 40), rng.randint(1, 40))


def test_compose_associative_on_rationals():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (psi(str(_rand_rational(rng))) for _ in range(3))
        assert same_correspondence(compose(compose(a, b), c), compose(a, compose(b, c)))


def test_compose_associative_on_independent_surds():
    a, b, c = psi("sqrt2"), psi("sqrt3"), psi("sqrt5")
    assert same_correspondence(compose(compose(a, b), c), compose(a, compose(b, c)))


def test_germ_examples():
    g = GermExponent
    assert germ_add(g(1, 2), g(1, 3)) == g(1, 2)
    assert germ_add(g(1, 5), g(2, 0)) == g(1, 5)
    assert germ_mul(g(1, 1), g(1, 0)) == g(2, 1)


germs = st.builds(
    GermExponent,
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)


@given(germs, germs, germs)
def test_germ_semiring_laws(x, y, z):
    assert x + x == x
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(germs, germs, st.fractions(min_value=0, max_value=1))
def test_germ_lex_min_is_min_near_zero(x, y, _):
    # the lex minimum is the smaller linear function for all small eps > 0
    eps = Fraction(1, 10**9)
    m = x + y
    vx = x.value + x.eps * eps
    vy = y.value + y.eps * eps
    assert m.value + m.eps * eps == min(vx, vy)


def test_germs_with_surd_values():
    a = GermExponent(Surd.sqrt(2), Fraction(1))
    b = GermExponent(Surd.quadratic(7, 0, 5, 2), Fraction(0))  # 7/5 < sqrt 2
    assert a + b == b


def test_span_reduce():
    assert span_reduce({0, 2, 5}) == (0, 5)
    assert span_reduce({3}) == (3, 3)
    assert span_reduce(range(0, 11)) == (0, 10)
    with pytest.raises(ValueError):
        span_reduce(set())


def test_presentation_examples():
    p = presentation(2, 3)
    assert p.relation == ((3, 0), (0, 2))  # X^3 = Y^2
    assert recover_pair(p) == {2, 3}
    p = presentation(3, 5)
    assert p.relation == ((5, 0), (0, 3))
    assert recover_pair(p) == {3, 5}
    with pytest.raises(NotRecoverable):
        recover_pair(presentation(1, 1))
    with pytest.raises(NotRecoverable):
        recover_pair(presentation(1, 7))


def test_recover_pair_round_trips():
    for n in range(2, 31):
        for m in range(n + 1, 31):
            if math.gcd(n, m) == 1:
                assert recover_pair(presentation(n, m)) == {n, m}


def test_rational_exponent_monoid_and_sylvester_threshold():
    for n in range(2, 9):
        for m in range(2, 9):
            if math.gcd(n, m) != 1:
                continue
            c = psi(f"{n}/{m}")
            # exponents a*lambda + b of Psi(n/m) are (1/m)(n a + m b)
            values = {c.value(ExponentVec(a, b)).as_fraction() for a in range(3 * m) for b in range(3 * n)}
            scaled = {int(v * m) for v in values if v * m <= n * m}
            assert scaled == set(numerical_semigroup((n, m), n * m))
            assert conductor((n, m)) == (n - 1) * (m - 1)


def test_dedekind_cut_bounded_examples():
    assert dedekind_cut_bounded(psi("sqrt2"), 5) == (Fraction(7, 5), Fraction(3, 2))
    assert dedekind_cut_bounded(psi("2"), 1) == (1, 2)
    for d in (1, 3, 8):
        assert dedekind_cut_bounded(psi("1"), d)[1] == 1
    assert dedekind_cut_bounded(psi("3/7"), 7)[1] == Fraction(3, 7)


def _cut_oracle(lam: float, q: int):
    # brute force over all b/a with a <= q using exact integer comparisons of b^2 vs 2 a^2
    lower = max(Fraction(b, a) for a in range(1, q + 1) for b in range(0, 2 * a) if b * b < 2 * a * a)
    upper = min(Fraction(b, a) for a in range(1, q + 1) for b in range(0, 2 * a + 1) if b * b >= 2 * a * a)
    return lower, upper


@pytest.mark.parametrize("q", [1, 2, 5, 12, 29, 40])
def test_bounded_cut_matches_brute_force(q):
    assert dedekind_cut_bounded(psi("sqrt2"), q) == _cut_oracle(2**0.5, q)


def test_dedekind_cut_by_partial_quotients():
    assert dedekind_cut(psi("sqrt2"), 5) == (Fraction(41, 29), Fraction(17, 12))
    assert dedekind_cut(psi("2"), 1) == (1, 2)
    assert dedekind_cut(psi("1"), 4)[1] == 1
    assert dedekind_cut(psi("3/7"), 7)[1] == Fraction(3, 7)


@pytest.mark.parametrize("slope", ["sqrt2", "sqrt3", "quadratic:1,1,2,5", "sqrt(7)/3"])
def test_cut_brackets_shrink_and_converge(slope):
    c = psi(slope)
    lam = c.slope.exact()
    prev = None
    for depth in range(1, 31):
        lo, hi = dedekind_cut(c, depth)
        assert (lam - lo).sign() > 0 and (lam - hi).sign() <= 0
        if prev is not None:
            assert prev[0] <= lo and hi <= prev[1]
        q = max(lo.denominator, hi.denominator)
        assert hi - lo <= Fraction(1, q)  # consecutive convergents differ by 1/(q q')
        prev = (lo, hi)
    assert float(prev[1] - prev[0]) < 1e-10


def test_cut_on_truncated_expansion():
    from charone import ContinuedFractionSlope, DepthExceeded

    c = make_correspondence(ContinuedFractionSlope([1] + [2] * 11))
    assert dedekind_cut(c, 12) == dedekind_cut(psi("sqrt2"), 12)
    with pytest.raises(DepthExceeded):
        dedekind_cut(c, 13)


def test_descent_matches_literal_scan():
    from charone.correspondences import _cut_below, _cut_scan

    rng = random.Random(3)
    slopes = ["sqrt2", "sqrt3", "sqrt(7)/3", "quadratic:1,1,2,5", "cf:3,1,4,1,5,9,2,6"]
    slopes += [f"{rng.randint(1, 99)}/{rng.randint(1, 99)}" for _ in range(20)]
    for text in slopes:
        c = psi(text)
        for bound in (1, 2, 3, 7, 40, 250):
            assert _cut_below(c, bound) == _cut_scan(c, bound), (text, bound)
