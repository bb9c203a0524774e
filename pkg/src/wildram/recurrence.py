"""First-order linear difference equations and the A/B/C coefficient system.

The leading three coefficients of Δ_m for the generic series
``z(1 + x2 z^2 + x3 z^3 + x4 z^4)`` obey a lower-triangular linear system in
m.  This module iterates that system, evaluates its closed-form solution, and
reduces the result at m = p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable

from .exact import odd_prime
from .identities import double_factorial
from .polyring import X2, X3, X4, MultiPoly


@dataclass(frozen=True)
class DiffEq:
    """y_{n+1} = multiplier(n) * y_n + forcing(n), with y_start = initial."""

    multiplier: Callable[[int], Any]
    forcing: Callable[[int], Any]
    initial: Any
    start: int = 0


def iterate_linear(eq: DiffEq, n: int):
    """Forward iteration of the recurrence up to index n."""
    if n < eq.start:
        raise ValueError("n precedes the initial index")
    y = eq.initial
    for k in range(eq.start, n):
        y = eq.multiplier(k) * y + eq.forcing(k)
    return y


def _product(values, one):
    result = one
    for v in values:
        result = v * result
    return result


def solve_linear(eq: DiffEq, n: int):
    """Closed product/sum solution.

    y_n = [prod_{j=n0}^{n-1} f(j)] y0 + sum_{r=n0}^{n-1} [prod_{j=r+1}^{n-1} f(j)] g(r)
    """
    if n < eq.start:
        raise ValueError("n precedes the initial index")
    n0 = eq.start
    y = _product((eq.multiplier(j) for j in range(n0, n)), 1) * eq.initial
    for r in range(n0, n):
        y = y + _product((eq.multiplier(j) for j in range(r + 1, n)), 1) * eq.forcing(r)
    return y


@dataclass(frozen=True)
class AbcState:
    A: MultiPoly
    B: MultiPoly
    C: MultiPoly
    m: int

    def reduce(self, p) -> "AbcState":
        return AbcState(self.A.reduce(p), self.B.reduce(p), self.C.reduce(p), self.m)


def abc_initial() -> AbcState:
    return AbcState(X2, X3, X4, 1)


def c_forcing_coefficient(m: int) -> MultiPoly:
    """Multiplier of A_m in the C-row, x2^2 C(2m+1, 2) + x4 (2m+1)."""
    return comb(2 * m + 1, 2) * X2 ** 2 + (2 * m + 1) * X4


def c_forcing_matrix_form(m: int) -> MultiPoly:
    """The same entry written as (x2^2 m + x4)(2m + 1)."""
    return (m * X2 ** 2 + X4) * (2 * m + 1)


def abc_step(s: AbcState) -> AbcState:
    m = s.m
    if m < 1:
        raise ValueError("level must be >= 1")
    a = (2 * m + 1) * X2 * s.A
    b = (2 * m + 1) * X3 * s.A + (2 * m + 2) * X2 * s.B
    c = (c_forcing_coefficient(m) * s.A + (2 * m + 2) * X3 * s.B
         + (2 * m + 3) * X2 * s.C)
    return AbcState(a, b, c, m + 1)


def abc_iterate(m: int) -> AbcState:
    if m < 1:
        raise ValueError("level must be >= 1")
    s = abc_initial()
    while s.m < m:
        s = abc_step(s)
    return s


def d_closed(m: int) -> MultiPoly:
    df = double_factorial(2 * m + 1)
    total = sum((Fraction(j - 1, 2 * j + 1) for j in range(1, m + 1)), Fraction(0))
    return df * total * X2 ** (m + 1)


def e_closed(m: int) -> MultiPoly:
    df = double_factorial(2 * m + 1)
    total = sum((Fraction(1, 2 * j + 1) for j in range(1, m + 1)), Fraction(0))
    return df * total * X2 ** (m - 1) * X4


def f_closed(m: int) -> MultiPoly:
    if m < 2:
        raise ValueError("F_m has the factor x2^(m-2); use m >= 2")
    df = double_factorial(2 * m + 1)
    total = sum((Fraction(2 * j, 2 * j + 1)
                 - Fraction(double_factorial(2 * j), double_factorial(2 * j + 1))
                 for j in range(1, m + 1)), Fraction(0))
    return df * total * X2 ** (m - 2) * X3 ** 2


def def_step(m: int, d: MultiPoly, e: MultiPoly, f: MultiPoly):
    """One step of the split C recurrence, from level m to m + 1."""
    mult = (2 * m + 3) * X2
    d_next = mult * d + m * double_factorial(2 * m + 1) * X2 ** (m + 2)
    e_next = mult * e + double_factorial(2 * m + 1) * X2 ** m * X4
    f_next = mult * f + (2 * (m + 1) * (double_factorial(2 * m + 1) - double_factorial(2 * m))
                         * X2 ** (m - 1) * X3 ** 2)
    return d_next, e_next, f_next


def abc_closed(m: int) -> AbcState:
    """Closed forms for A_m, B_m and C_m = D_m + E_m + F_m."""
    if m < 1:
        raise ValueError("level must be >= 1")
    if m == 1:
        return abc_initial()
    a = double_factorial(2 * m - 1) * X2 ** m
    b = (double_factorial(2 * m + 1) - double_factorial(2 * m)) * X2 ** (m - 1) * X3
    c = d_closed(m) + e_closed(m) + f_closed(m)
    return AbcState(a, b, c, m)


def c_p_reduction(p) -> MultiPoly:
    """x2^(p-2) (3/2 x2^3 + x3^2 - x2 x4) over F_p."""
    p = odd_prime(p)
    q = X2 ** (p - 2) * (Fraction(3, 2) * X2 ** 3 + X3 ** 2 - X2 * X4)
    return q.reduce(p)
