"""Exact coefficient domains: prime fields and rationals with p-adic valuation.

Rationals are plain :class:`fractions.Fraction` values; this module adds the
valuation and reduction ("tilde") maps needed to pass from Z_p ∩ Q to F_p.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import NotPIntegralError, OddPrimeRequired

# Deterministic for n < 3.3e24, which covers every modulus we accept.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """An integer checked to be prime at construction."""

    def __new__(cls, p):
        if isinstance(p, Prime):
            return p
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            raise TypeError(f"prime must be an integer, got {p!r}")
        p = int(p)
        if p >= 2**64 or not is_prime(p):
            raise ValueError(f"{p} is not a supported prime")
        return super().__new__(cls, p)

    def require_odd(self) -> "Prime":
        if self == 2:
            raise OddPrimeRequired("only stated for odd primes; got p = 2")
        return self


def odd_prime(p) -> Prime:
    return Prime(p).require_odd()


class FieldElement:
    """A residue modulo a prime ``p``; immutable."""

    __slots__ = ("residue", "p")

    def __init__(self, value, p):
        p = Prime(p)
        if isinstance(value, FieldElement):
            if value.p != p:
                raise ValueError("moduli differ")
            value = value.residue
        elif isinstance(value, Rational) and not isinstance(value, int):
            value = reduce_mod_p(Fraction(value), p).residue
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "residue", int(value) % p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, Rational):
            return reduce_mod_p(Fraction(other), self.p).residue
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.residue + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.residue - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(o - self.residue, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.residue * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.residue, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return field_inv(self) ** (-k)
        return FieldElement(pow(self.residue, k, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * field_inv(FieldElement(o, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(o, self.p) * field_inv(self)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, int(self.p)))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    __index__ = __int__

    def __repr__(self):
        return f"FieldElement({self.residue}, p={int(self.p)})"

    def __str__(self):
        return str(self.residue)


def field_inv(x: FieldElement) -> FieldElement:
    if x.residue == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{x.p}")
    return FieldElement(pow(x.residue, -1, x.p), x.p)


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(r, p) -> int | float:
    """v_p(r) for a rational ``r``; ``math.inf`` for zero."""
    r = Fraction(r)
    p = Prime(p)
    if r == 0:
        return math.inf
    return _int_valuation(r.numerator, p) - _int_valuation(r.denominator, p)


def reduce_mod_p(r, p) -> FieldElement:
    """Image of a p-integral rational in F_p."""
    r = Fraction(r)
    p = Prime(p)
    if r.denominator % p == 0:
        raise NotPIntegralError(f"{r} has negative {int(p)}-adic valuation")
    return FieldElement(r.numerator * pow(r.denominator, -1, p), p)


class PrimeField:
    """F_p as a coefficient ring for truncated series.

    Series store raw residues (``int`` in ``[0, p)``) for speed;
    :meth:`element` wraps one as a :class:`FieldElement`.
    """

    def __init__(self, p):
        self.p = Prime(p)
        self.zero = 0
        self.one = 1
        # int64 convolution is exact while n * (p-1)^2 < 2^63
        self._numpy_max_len = (2**63 - 1) // max((self.p - 1) ** 2, 1)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", int(self.p)))

    def __repr__(self):
        return f"PrimeField({int(self.p)})"

    def coerce(self, x) -> int:
        if isinstance(x, FieldElement):
            if x.p != self.p:
                raise ValueError(f"element of F_{x.p} used in F_{self.p}")
            return x.residue
        if isinstance(x, int):
            return x % self.p
        return reduce_mod_p(x, self.p).residue

    def reduce(self, x) -> int:
        return x % self.p

    def element(self, x) -> FieldElement:
        return FieldElement(x, self.p)

    def mul_trunc(self, a, b, n):
        """Product of coefficient lists, truncated to degrees < n."""
        la, lb = min(len(a), n), min(len(b), n)
        if la == 0 or lb == 0:
            return []
        if min(la, lb) <= self._numpy_max_len:
            c = np.convolve(np.asarray(a[:la], dtype=np.int64),
                            np.asarray(b[:lb], dtype=np.int64))[:n] % self.p
            return c.tolist()
        return [x % self.p for x in generic_mul_trunc(a, b, n, 0)]


class RationalField:
    """Q with :class:`Fraction` elements."""

    zero = Fraction(0)
    one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"

    def coerce(self, x):
        return Fraction(x)

    def reduce(self, x):
        return x

    def mul_trunc(self, a, b, n):
        return generic_mul_trunc(a, b, n, self.zero)


def generic_mul_trunc(a, b, n, zero):
    """Schoolbook truncated product over any ring with ``+`` and ``*``."""
    la, lb = min(len(a), n), min(len(b), n)
    if la == 0 or lb == 0:
        return []
    nz_a = [(i, x) for i, x in enumerate(a[:la]) if x]
    nz_b = [(j, y) for j, y in enumerate(b[:lb]) if y]
    out = [zero] * min(la + lb - 1, n)
    for i, x in nz_a:
        for j, y in nz_b:
            if i + j >= n:
                break
            out[i + j] = out[i + j] + x * y
    return out


def odd_primes_upto(n: int) -> list[int]:
    return [q for q in range(3, n + 1, 2) if is_prime(q)]
