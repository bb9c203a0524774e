"""Double-factorial sums and their closed forms.

Every sum is evaluated straight from its definition as an exact
:class:`Fraction`, independently of the closed form it is compared with.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import odd_prime, padic_valuation, reduce_mod_p


@lru_cache(maxsize=None)
def double_factorial(n: int) -> int:
    """n!! with 0!! = 1!! = 1."""
    if n < 0:
        raise ValueError("double factorial of a negative number")
    result = 1
    for k in range(n, 1, -2):
        result *= k
    return result


def _require_positive(n):
    if n < 1:
        raise ValueError("n must be >= 1")


def r_sum(n: int) -> Fraction:
    """(2n-1)!! * sum_{r=1..n} prod_{j=r+1..n} 2j/(2j-1)."""
    _require_positive(n)
    # suffix products: prod_{j=r+1..n} for r = n, n-1, ..., 1
    total = Fraction(0)
    prod = Fraction(1)
    for r in range(n, 0, -1):
        total += prod
        prod *= Fraction(2 * r, 2 * r - 1)
    return double_factorial(2 * n - 1) * total


def r_closed(n: int) -> int:
    _require_positive(n)
    return double_factorial(2 * n + 1) - double_factorial(2 * n)


def t_sum(n: int) -> Fraction:
    """(2n+1)!! * sum_{j=1..n} (2j)!!/(2j+1)!!."""
    _require_positive(n)
    total = sum((Fraction(double_factorial(2 * j), double_factorial(2 * j + 1))
                 for j in range(1, n + 1)), Fraction(0))
    return double_factorial(2 * n + 1) * total


def t_closed(n: int) -> int:
    _require_positive(n)
    return double_factorial(2 * n + 2) - 2 * double_factorial(2 * n + 1)


def s_terms(n: int, alpha: int, beta: int) -> list[Fraction]:
    """The summands (2n+1)!! (alpha*j + beta)/(2j+1), j = 1..n."""
    _require_positive(n)
    df = double_factorial(2 * n + 1)
    # 2j+1 divides (2n+1)!! for j <= n, so every summand is an integer
    return [Fraction((alpha * j + beta) * (df // (2 * j + 1))) for j in range(1, n + 1)]


def s_general(n: int, alpha: int, beta: int) -> Fraction:
    _require_positive(n)
    df = double_factorial(2 * n + 1)
    return Fraction(sum((alpha * j + beta) * (df // (2 * j + 1)) for j in range(1, n + 1)))


def s_sum(p, alpha: int, beta: int) -> Fraction:
    """S_p(alpha, beta) for an odd prime p; lies in Z_p with reduction alpha/2 - beta."""
    p = odd_prime(p)
    return s_general(p, alpha, beta)


def s_expected_reduction(p, alpha: int, beta: int):
    p = odd_prime(p)
    return reduce_mod_p(Fraction(alpha, 2) - beta, p)


def wilson_constant(p) -> Fraction:
    """(2p+1)!!/p; a p-adic unit congruent to -1 mod p."""
    p = odd_prime(p)
    return Fraction(double_factorial(2 * p + 1), p)


def non_divisible_terms(p, alpha: int, beta: int) -> list[int]:
    """Indices j whose summand of S_p(alpha, beta) has valuation < 1."""
    p = odd_prime(p)
    return [j for j, t in enumerate(s_terms(p, alpha, beta), start=1)
            if padic_valuation(t, p) < 1]


def verify_identities(max_n: int = 200, max_p: int = 97,
                      alpha_beta: range = range(-10, 11)) -> list[dict]:
    """Check every identity over the given ranges; one record per identity."""
    from .exact import odd_primes_upto

    primes = odd_primes_upto(max_p)
    prange = f"odd p <= {max_p}"
    report = []

    def record(name, rng, ok):
        report.append({"identity": name, "range": rng, "status": "pass" if ok else "fail"})

    record("double_factorial recurrence n!! = n(n-2)!!", f"2 <= n <= {2 * max_n + 2}",
           double_factorial(0) == 1 and double_factorial(1) == 1
           and all(double_factorial(n) == n * double_factorial(n - 2)
                   for n in range(2, 2 * max_n + 3)))
    record("R_n = (2n+1)!! - (2n)!!", f"1 <= n <= {max_n}",
           all(r_sum(n) == r_closed(n) for n in range(1, max_n + 1)))
    record("T_n = (2n+2)!! - 2(2n+1)!!", f"1 <= n <= {max_n}",
           all(t_sum(n) == t_closed(n) for n in range(1, max_n + 1)))
    record("R_p = T_p = 0 mod p", prange,
           all(r_closed(p) % p == 0 and t_closed(p) % p == 0 for p in primes))
    ok_s = True
    ok_terms = True
    for p in primes:
        for a in alpha_beta:
            for b in alpha_beta:
                s = s_sum(p, a, b)
                if padic_valuation(s, p) < 0 or reduce_mod_p(s, p) != s_expected_reduction(p, a, b):
                    ok_s = False
        # only the j = (p-1)/2 summand can escape pZ_p
        ok_terms &= set(non_divisible_terms(p, 1, 1)) <= {(p - 1) // 2}
        ok_terms &= all(padic_valuation(t, p) >= 1
                        for j, t in enumerate(s_terms(p, 1, 0), start=1) if j != (p - 1) // 2)
    record("S_p(alpha,beta) in Z_p, reduces to alpha/2 - beta",
           f"{prange}, alpha, beta in [{alpha_beta.start}, {alpha_beta.stop - 1}]", ok_s)
    record("only the j=(p-1)/2 term of S_p is not in pZ_p", prange, ok_terms)
    record("(2p+1)!!/p = -1 mod p", prange,
           all(padic_valuation(wilson_constant(p), p) == 0
               and reduce_mod_p(wilson_constant(p), p) == p - 1 for p in primes))
    return report
