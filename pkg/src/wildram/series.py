"""Truncated power series over a generic coefficient ring.

A :class:`TruncatedSeries` knows its coefficients exactly up to
``precision``; nothing is assumed about higher degrees.  A series built from
a polynomial has ``precision = math.inf`` and is padded with exact zeros to
whatever working precision an operation asks for.

The coefficient ring is any object with ``zero``, ``one``, ``coerce``,
``reduce`` and ``mul_trunc`` (see :class:`~wildram.exact.PrimeField`,
:class:`~wildram.exact.RationalField`,
:class:`~wildram.polyring.PolynomialRing`).  Ring elements themselves must
support ``+``, ``-``, ``*`` and truthiness-as-nonzero.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import (InsufficientPrecisionError, LinearCoefficientError,
                     NonZeroConstantTermError, SeriesSyntaxError)
from .exact import PrimeField


@dataclass(frozen=True)
class SeriesOrder:
    """Order of a series; ``lower_bound`` is set when every known coefficient vanished."""

    value: int | float
    lower_bound: bool = False

    @property
    def is_infinite(self) -> bool:
        return self.value == math.inf

    def __int__(self):
        if self.is_infinite:
            raise OverflowError("order is infinite")
        return int(self.value)


class TruncatedSeries:
    __slots__ = ("ring", "coeffs", "precision")

    def __init__(self, coeffs, ring, precision=math.inf):
        if precision != math.inf:
            if precision < 0:
                raise ValueError("precision must be nonnegative")
            precision = int(precision)
        cs = [ring.coerce(c) for c in coeffs]
        if precision != math.inf:
            cs = cs[:precision + 1]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)
        self.precision = precision

    @classmethod
    def _raw(cls, coeffs, ring, precision):
        cs = list(coeffs)
        if precision != math.inf:
            del cs[precision + 1:]
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(cs)
        obj.precision = precision
        return obj

    @classmethod
    def identity(cls, ring, precision=math.inf):
        return cls([ring.zero, ring.one], ring, precision)

    @classmethod
    def from_terms(cls, terms: dict, ring, precision=math.inf):
        """Build from ``{degree: coefficient}``."""
        deg = max(terms, default=-1)
        cs = [ring.zero] * (deg + 1)
        for k, c in terms.items():
            cs[k] = c
        return cls(cs, ring, precision)

    @property
    def is_exact(self) -> bool:
        """True for a polynomial whose higher coefficients are known zeros."""
        return self.precision == math.inf

    @property
    def degree(self) -> int:
        """Largest degree with a nonzero known coefficient; -1 if none."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if k < 0:
            raise IndexError(k)
        if k > self.precision:
            raise InsufficientPrecisionError(
                f"coefficient of degree {k} unknown (precision {self.precision})")
        return self.coeffs[k] if k < len(self.coeffs) else self.ring.zero

    def coefficient_list(self, n: int | None = None) -> list:
        """Coefficients of degrees 0..n (default: up to precision or degree)."""
        if n is None:
            n = self.degree if self.is_exact else self.precision
        return [self[k] for k in range(n + 1)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, n: int) -> "TruncatedSeries":
        return TruncatedSeries._raw(self.coeffs, self.ring, min(self.precision, n))

    def order(self) -> SeriesOrder:
        return order(self)

    def _check_ring(self, other):
        if not isinstance(other, TruncatedSeries):
            return False
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        return True

    def __add__(self, other):
        if not self._check_ring(other):
            return NotImplemented
        prec = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        z = self.ring.zero
        red = self.ring.reduce
        out = [red((a[k] if k < len(a) else z) + (b[k] if k < len(b) else z))
               for k in range(n)]
        return TruncatedSeries._raw(out, self.ring, prec)

    def __neg__(self):
        red = self.ring.reduce
        return TruncatedSeries._raw([red(-c) for c in self.coeffs], self.ring, self.precision)

    def __sub__(self, other):
        if not self._check_ring(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not self._check_ring(other):
            return NotImplemented
        prec = min(_mul_precision(self, other), _mul_precision(other, self))
        n = len(self.coeffs) + len(other.coeffs) if prec == math.inf else prec + 1
        return TruncatedSeries._raw(self.ring.mul_trunc(list(self.coeffs), list(other.coeffs), n),
                                    self.ring, prec)

    def scale(self, c) -> "TruncatedSeries":
        c = self.ring.coerce(c)
        red = self.ring.reduce
        return TruncatedSeries._raw([red(c * x) for x in self.coeffs], self.ring, self.precision)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ring == other.ring and self.precision == other.precision
                and self.coeffs == other.coeffs)

    def agrees_with(self, other, upto: int | None = None) -> bool:
        """Coefficientwise equality up to the common (or given) precision."""
        n = min(self.precision, other.precision)
        if upto is not None:
            n = min(n, upto)
        if n == math.inf:
            return self.coeffs == other.coeffs
        return self.coefficient_list(n) == other.coefficient_list(n)

    def __call__(self, inner):
        return compose(self, inner)

    def __repr__(self):
        return f"TruncatedSeries({self.to_str()!r}, {self.ring!r})"

    def to_str(self, var: str = "z") -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if not mono:
                body = cs
            elif c == self.ring.one:
                body = mono
            else:
                body = f"{cs}*{mono}"
            parts.append(body)
        text = " + ".join(parts) if parts else "0"
        if not self.is_exact:
            text += f" + O({var}^{self.precision + 1})"
        return text


def _mul_precision(a, b):
    # unknown terms of a (degree > a.precision) times b start at a.precision + 1 + ord(b)
    if a.precision == math.inf:
        return math.inf
    ob = order(b)
    shift = ob.value if not ob.is_infinite else math.inf
    return a.precision + shift


def order(s: TruncatedSeries) -> SeriesOrder:
    for k, c in enumerate(s.coeffs):
        if c:
            return SeriesOrder(k)
    if s.is_exact:
        return SeriesOrder(math.inf)
    return SeriesOrder(s.precision + 1, lower_bound=True)


def compose(outer: TruncatedSeries, inner: TruncatedSeries, precision=None) -> TruncatedSeries:
    """``outer(inner(z))`` by Horner's scheme with truncating products.

    The result is exact up to ``min(outer.precision, inner.precision,
    precision)``.  When both inputs are polynomials and no precision is
    given the full composite polynomial is returned.
    """
    if outer.ring != inner.ring:
        raise ValueError("ring mismatch")
    if inner.coeffs and inner.coeffs[0]:
        raise NonZeroConstantTermError("inner series must have zero constant term")
    ring = outer.ring
    prec = min(outer.precision, inner.precision)
    if precision is not None:
        prec = min(prec, precision)
    if prec == math.inf:
        n = max(outer.degree, 0) * max(inner.degree, 1) + 1
    else:
        n = prec + 1
    out_c = outer.coeffs[:n]
    inner_c = list(inner.coeffs[:n])
    if not out_c:
        return TruncatedSeries._raw([], ring, prec)
    red = ring.reduce
    acc = [out_c[-1]]
    for c in reversed(out_c[:-1]):
        acc = ring.mul_trunc(acc, inner_c, n)
        if acc:
            acc[0] = red(acc[0] + c)
        else:
            acc = [c]
    return TruncatedSeries._raw(acc, ring, prec)


def _check_composable(g: TruncatedSeries):
    if g[0]:
        raise NonZeroConstantTermError("series must fix the origin (g(0) = 0)")


def iterate(g: TruncatedSeries, m: int, precision=None) -> TruncatedSeries:
    """m-fold self-composition ``g∘g∘…∘g`` using m - 1 calls to :func:`compose`."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    _check_composable(g)
    result = g if precision is None else g.truncate(precision)
    for _ in range(m - 1):
        result = compose(g, result, precision)
    return result


def delta(g: TruncatedSeries, m: int, precision=None) -> TruncatedSeries:
    """The difference sequence Δ_1 = g - z, Δ_m = Δ_{m-1}∘g - Δ_{m-1}.

    Δ_m agrees with ``iterate(g, m) - z`` only when m is the characteristic
    of the ring; over Q it is the m-th finite difference of the orbit.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    _check_composable(g)
    if g[1] != g.ring.one:
        raise LinearCoefficientError("linear coefficient must be 1")
    if precision is not None:
        g = g.truncate(precision)
    d = g - TruncatedSeries.identity(g.ring)
    for _ in range(m - 1):
        d = compose(d, g, precision) - d
    return d


# series literals: "p=5; g = z + z^3 + 2*z^4"

_HEADER = re.compile(r"^\s*p\s*=\s*(\d+)\s*;", re.I)
_NAME = re.compile(r"^\s*[A-Za-z_]\w*\s*=(?!=)")
_TERM = re.compile(r"([+-]?)(\d*)(\*?)(z(?:\^(\d+))?)?")


def parse_series(text: str, p=None) -> TruncatedSeries:
    """Parse a series literal into an exact polynomial over F_p.

    Grammar (whitespace-insensitive)::

        literal := [ "p" "=" INT ";" ] [ NAME "=" ] term { ("+"|"-") term }
        term    := [INT] ["*"] [ "z" [ "^" INT ] ]

    Integer coefficients are reduced mod p.  ``p`` may be given in the text,
    as an argument, or both (they must agree).
    """
    m = _HEADER.match(text)
    if m:
        text_p = int(m.group(1))
        if p is not None and int(p) != text_p:
            raise SeriesSyntaxError(f"p={text_p} in literal but p={p} requested")
        p = text_p
        text = text[m.end():]
    if p is None:
        raise SeriesSyntaxError("no prime given")
    try:
        ring = PrimeField(p)
    except (ValueError, TypeError) as exc:
        raise SeriesSyntaxError(str(exc)) from None
    text = _NAME.sub("", text, count=1)
    body = re.sub(r"\s+", "", text)
    if not body:
        raise SeriesSyntaxError("empty series")
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(body):
        mt = _TERM.match(body, pos)
        sign, num, star, var, power = mt.groups()
        if mt.end() == pos or (not num and not var):
            raise SeriesSyntaxError(f"cannot parse term at {body[pos:]!r}")
        if pos > 0 and not sign:
            raise SeriesSyntaxError(f"missing operator before {body[pos:]!r}")
        if star and not (num and var):
            raise SeriesSyntaxError(f"misplaced '*' in {body[pos:mt.end()]!r}")
        coeff = int(num) if num else 1
        if sign == "-":
            coeff = -coeff
        deg = 0 if not var else (int(power) if power is not None else 1)
        terms[deg] = terms.get(deg, 0) + coeff
        pos = mt.end()
    return TruncatedSeries.from_terms(terms, ring)
