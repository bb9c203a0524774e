from fractions import Fraction

import pytest
import sympy as sp

from wildram.errors import OddPrimeRequired
from wildram.exact import odd_primes_upto, padic_valuation, reduce_mod_p
from wildram.identities import (double_factorial, non_divisible_terms, r_closed, r_sum,
                                s_general, s_sum, t_closed, t_sum, verify_identities,
                                wilson_constant)

from oracles import double_factorial_product

SMALL_PRIMES = [3, 5, 7, 11, 13]


def test_double_factorial_examples():
    assert double_factorial(0) == 1
    assert double_factorial(1) == 1
    assert double_factorial(5) == 15
    assert double_factorial(8) == 384


def test_double_factorial_against_independent_products():
    for n in range(0, 200):
        assert double_factorial(n) == double_factorial_product(n) == sp.factorial2(n)


def test_r_examples():
    assert r_sum(1) == r_closed(1) == 1
    assert r_sum(2) == r_closed(2) == 7
    # definitional form for n = 2: 3!! (4/3 + 1)
    assert 3 * (Fraction(4, 3) + 1) == 7


def test_t_examples():
    assert t_sum(1) == t_closed(1) == 2
    assert t_sum(2) == t_closed(2) == 18
    assert 3 * Fraction(2, 3) == 2


def test_r_t_agree_up_to_200():
    for n in range(1, 201):
        assert r_sum(n) == r_closed(n)
        assert t_sum(n) == t_closed(n)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_r_t_vanish_mod_p(p):
    assert reduce_mod_p(r_sum(p), p) == 0
    assert reduce_mod_p(t_sum(p), p) == 0


def test_s_examples():
    assert s_sum(3, 1, -1) == 105 * (Fraction(1, 5) + Fraction(2, 7)) == 51
    assert reduce_mod_p(51, 3) == 0
    assert s_sum(5, 1, -1) == 10395 * sum(Fraction(j, 2 * j + 3) for j in range(1, 5)) == 12294
    assert reduce_mod_p(s_sum(5, 1, -1), 5) == reduce_mod_p(Fraction(3, 2), 5) == 4
    assert reduce_mod_p(s_sum(5, 0, 1), 5) == 4


def test_s_general_matches_fraction_sum():
    for n in range(1, 30):
        for a, b in [(1, -1), (0, 1), (2, 0), (-3, 7)]:
            direct = double_factorial(2 * n + 1) * sum(
                (Fraction(a * j + b, 2 * j + 1) for j in range(1, n + 1)), Fraction(0))
            assert s_general(n, a, b) == direct


def test_s_integral_with_expected_reduction():
    for p in odd_primes_upto(97):
        for a in range(-10, 11):
            for b in range(-10, 11):
                s = s_sum(p, a, b)
                assert padic_valuation(s, p) >= 0
                assert reduce_mod_p(s, p) == reduce_mod_p(Fraction(a, 2) - b, p)


def test_only_middle_term_escapes():
    for p in odd_primes_upto(97):
        assert non_divisible_terms(p, 1, 0) == [(p - 1) // 2]


def test_wilson_examples():
    assert wilson_constant(3) == 35 and 35 % 3 == 2
    assert wilson_constant(5) == 2079 and 2079 % 5 == 4
    assert reduce_mod_p(wilson_constant(7), 7) == 6


def test_wilson_is_minus_one():
    for p in odd_primes_upto(97):
        c = wilson_constant(p)
        assert padic_valuation(c, p) == 0
        assert reduce_mod_p(c, p) == p - 1
        assert (sp.factorial(p - 1) + 1) % p == 0


def test_odd_prime_required():
    with pytest.raises(OddPrimeRequired):
        s_sum(2, 1, 1)
    with pytest.raises(OddPrimeRequired):
        wilson_constant(2)


def test_verify_report_shape():
    report = verify_identities(max_n=30, max_p=23)
    assert all(set(r) == {"identity", "range", "status"} for r in report)
    assert all(r["status"] == "pass" for r in report)
