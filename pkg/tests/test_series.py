import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from wildram.errors import (InsufficientPrecisionError, LinearCoefficientError,
                            NonZeroConstantTermError, SeriesSyntaxError)
from wildram.exact import PrimeField, RationalField
from wildram.polyring import X2, X3, X4, PolynomialRing
from wildram.series import (SeriesOrder, TruncatedSeries, compose, delta, iterate, order,
                            parse_series)

from oracles import poly_compose, poly_iterate


def as_dict(s: TruncatedSeries, upto=None):
    n = s.degree if upto is None else upto
    return {k: s[k] for k in range(n + 1) if s[k]}


def random_series(rng, p, degree, tangent=True):
    cs = [0, 1] + [rng.randrange(p) for _ in range(degree - 1)]
    if not tangent:
        cs[1] = rng.randrange(1, p)
    return TruncatedSeries(cs, PrimeField(p))


def test_compose_example_f3():
    g = TruncatedSeries([0, 1, 0, 1], PrimeField(3))
    h = compose(g, g, 9)
    assert h.coefficient_list(9) == [0, 1, 0, 2, 0, 0, 0, 0, 0, 1]
    assert as_dict(h) == poly_compose({1: 1, 3: 1}, {1: 1, 3: 1}, 3, 9)


def test_compose_identity_inner():
    g = parse_series("z + 3*z^2 + z^5", 7)
    assert compose(g, TruncatedSeries.identity(g.ring)) == g


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_compose_involution_square(p):
    f = parse_series("-z + z^2", p)
    assert compose(f, f) == parse_series("z - 2*z^3 + z^4", p)
    assert iterate(f, 2) == compose(f, f)


def test_compose_requires_zero_constant():
    g = parse_series("z", 5)
    with pytest.raises(NonZeroConstantTermError):
        compose(g, parse_series("1 + z", 5))


def test_compose_precision_is_min():
    F = PrimeField(5)
    a = TruncatedSeries([0, 1, 2], F, precision=7)
    b = TruncatedSeries([0, 1, 0, 3], F, precision=4)
    assert compose(a, b).precision == 4
    assert compose(a, b, 2).precision == 2


def test_iterate_z_plus_z3_p5():
    g = parse_series("z + z^3", 5)
    h = iterate(g, 5, 14)
    assert h[13] == 4 and h[11] == 0 and h[12] == 0
    oracle = poly_iterate({1: 1, 3: 1}, 5, 5, 14)
    assert as_dict(h, 14) == oracle


def test_iterate_one_is_identity_map():
    g = parse_series("z + 2*z^2", 7)
    assert iterate(g, 1) == g


@pytest.mark.parametrize("p", [3, 5, 7])
def test_iterate_matches_oracle(p):
    rng = random.Random(p)
    for _ in range(10):
        g = random_series(rng, p, 4)
        N = 2 * p + 6
        assert as_dict(iterate(g, p, N), N) == poly_iterate(as_dict(g), p, p, N)


def test_delta_base_case():
    g = parse_series("z + z^3 + 4*z^4", 5)
    assert delta(g, 1) == g - TruncatedSeries.identity(g.ring)


def test_delta_symbolic_level_two():
    R = PolynomialRing()
    gh = TruncatedSeries([0, 1, 0, X2, X3, X4], R)
    d2 = delta(gh, 2, 7)
    assert d2.coefficient_list(7)[:5] == [R.zero] * 5
    assert d2[5] == 3 * X2**2
    assert d2[6] == 7 * X2 * X3
    assert d2[7] == 3 * X2**3 + 4 * X3**2 + 8 * X2 * X4


def test_delta_of_identity_is_zero():
    z = TruncatedSeries.identity(PrimeField(5))
    for m in range(1, 6):
        assert delta(z, m).is_zero()


def test_delta_requires_tangent():
    with pytest.raises(LinearCoefficientError):
        delta(parse_series("2*z + z^2", 5), 2)


def test_order_examples():
    F = PrimeField(5)
    assert order(TruncatedSeries([0, 0, 0, 1, 1], F)) == SeriesOrder(3)
    assert order(TruncatedSeries([], F)) == SeriesOrder(math.inf)
    assert order(TruncatedSeries([0] * 11, F, precision=10)) == SeriesOrder(11, lower_bound=True)


def test_unknown_coefficients_raise():
    s = TruncatedSeries([0, 1], PrimeField(3), precision=4)
    assert s[4] == 0
    with pytest.raises(InsufficientPrecisionError):
        s[5]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(0, 10**6))
def test_composition_associative(p, seed):
    rng = random.Random(seed)
    f, g, h = (random_series(rng, p, 6, tangent=False) for _ in range(3))
    N = 12
    lhs = compose(compose(f, g, N), h, N)
    rhs = compose(f, compose(g, h, N), N)
    assert lhs.agrees_with(rhs)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_delta_p_equals_iterate_minus_z(p):
    rng = random.Random(100 + p)
    for _ in range(15):
        g = random_series(rng, p, 6)
        N = 4 * p + 4
        lhs = delta(g, p, N)
        rhs = iterate(g, p, N) - TruncatedSeries.identity(g.ring)
        assert lhs == rhs


def test_delta_over_q_is_finite_difference():
    # over Q, Δ_m = sum_k (-1)^(m-k) C(m,k) g^k
    from math import comb
    Q = RationalField()
    g = TruncatedSeries([0, 1, 0, 2, -1, 3], Q)
    N = 11
    m = 4
    expected = TruncatedSeries([], Q, N)
    for k in range(m + 1):
        gk = TruncatedSeries.identity(Q) if k == 0 else iterate(g, k, N)
        expected = expected + gk.scale((-1) ** (m - k) * comb(m, k))
    assert delta(g, m, N).agrees_with(expected)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_order_of_composition_multiplies(p, a, b, seed):
    rng = random.Random(seed)
    F = PrimeField(p)
    f = TruncatedSeries([0] * a + [rng.randrange(1, p), rng.randrange(p)], F)
    g = TruncatedSeries([0] * b + [rng.randrange(1, p), rng.randrange(p)], F)
    h = compose(f, g, 20)
    assert order(h).value == a * b


def test_polynomial_padding_to_any_precision():
    g = parse_series("z + z^2", 5)
    assert g.is_exact
    assert g.truncate(30)[30] == 0
    assert g.truncate(30).precision == 30


@pytest.mark.parametrize("text,p,expected", [
    ("p=5; g = z + z^3 + 2*z^4", None, {1: 1, 3: 1, 4: 2}),
    ("  -z +   z^2 ", 11, {1: 10, 2: 1}),
    ("z - 2*z^3 + z^4", 7, {1: 1, 3: 5, 4: 1}),
    ("3 + 7z", 5, {0: 3, 1: 2}),
    ("z + z - z", 3, {1: 1}),
])
def test_parse_series(text, p, expected):
    assert as_dict(parse_series(text, p)) == expected


@pytest.mark.parametrize("text,p", [
    ("z +", 5), ("z ** 2", 5), ("z^", 5), ("", 5), ("z", None), ("p=4; z", None),
    ("p=5; z", 7), ("z z", 5), ("y + z", 5),
])
def test_parse_series_errors(text, p):
    with pytest.raises(SeriesSyntaxError):
        parse_series(text, p)


def test_multipoly_series_rendering():
    R = PolynomialRing()
    gh = TruncatedSeries([0, 1, 0, X2, X3 + X4], R, precision=6)
    assert gh.to_str() == "z + x2*z^3 + (x3 + x4)*z^4 + O(z^7)"
