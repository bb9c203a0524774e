"""Sparse polynomials in x2, x3, x4 over Q (or over F_p after reduction).

A :class:`MultiPoly` maps exponent vectors ``(e2, e3, e4)`` to nonzero
coefficients.  Over Q the coefficients are :class:`Fraction`; a polynomial
with ``modulus=p`` holds residues in ``[0, p)``.

The text form is ``3/2*x2^3 + x3^2 - x2*x4`` with terms in graded
lexicographic order (x2 > x3 > x4); :func:`parse_poly` reads it back.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .exact import FieldElement, Prime, generic_mul_trunc, reduce_mod_p
from .errors import NotPIntegralError

VARIABLES = ("x2", "x3", "x4")
NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * NVARS


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("_terms", "modulus", "_hash")

    def __init__(self, terms: Mapping | None = None, modulus=None):
        self.modulus = None if modulus is None else Prime(modulus)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != NVARS or min(exp) < 0:
                raise ValueError(f"bad exponent vector {exp}")
            c = self._coerce_coeff(c)
            if c:
                clean[exp] = c
        self._terms = clean
        self._hash = None

    def _coerce_coeff(self, c):
        if self.modulus is None:
            if isinstance(c, FieldElement):
                raise TypeError("F_p element in a polynomial over Q")
            return Fraction(c)
        if isinstance(c, FieldElement):
            return c.residue if c.p == self.modulus else _bad_mod(c, self.modulus)
        if isinstance(c, int):
            return c % self.modulus
        return reduce_mod_p(c, self.modulus).residue

    @classmethod
    def _raw(cls, terms, modulus):
        # terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.modulus = modulus
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, modulus=None):
        return cls({_ZERO_EXP: c}, modulus)

    @classmethod
    def gen(cls, name: str, modulus=None):
        i = VARIABLES.index(name)
        exp = [0] * NVARS
        exp[i] = 1
        return cls({tuple(exp): 1}, modulus)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, exp) -> Fraction | int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        i = VARIABLES.index(var)
        return max((e[i] for e in self._terms), default=-1)

    # arithmetic

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.modulus != self.modulus:
                raise ValueError("cannot mix polynomials over different rings")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return MultiPoly.constant(other, self.modulus)
        return None

    def _norm(self, c):
        return c % self.modulus if self.modulus is not None else c

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = self._norm(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(out, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: self._norm(-c) for e, c in self._terms.items()},
                              self.modulus)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return MultiPoly._raw({}, self.modulus)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        if self.modulus is not None:
            out = {e: c % self.modulus for e, c in out.items()}
        return MultiPoly._raw({e: c for e, c in out.items() if c}, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.modulus == other.modulus and self._terms == other._terms
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self._terms == lifted._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, frozenset(self._terms.items())))
        return self._hash

    # reduction and evaluation

    def min_valuation(self, p) -> int | float:
        from .exact import padic_valuation
        return min((padic_valuation(c, p) for c in self._terms.values()),
                   default=float("inf"))

    def reduce(self, p) -> "MultiPoly":
        """Coefficientwise reduction to F_p; every coefficient must be p-integral."""
        if self.modulus is not None:
            raise ValueError("polynomial is already over a prime field")
        p = Prime(p)
        return MultiPoly({e: reduce_mod_p(c, p).residue for e, c in self._terms.items()},
                         modulus=p)

    def evaluate(self, values: Mapping):
        """Substitute ring values for x2, x3, x4 (missing variables count as 0)."""
        vals = [values.get(v, 0) for v in VARIABLES]
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v ** k
            total = total + t
        return total

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            neg = self.modulus is None and c < 0
            mag = -c if neg else c
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARIABLES, exp) if k)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{'-' if neg else '+'} {body}")
        return " ".join(parts)

    def __repr__(self):
        mod = "" if self.modulus is None else f", mod {int(self.modulus)}"
        return f"MultiPoly({self}{mod})"


def _bad_mod(c, p):
    raise ValueError(f"element of F_{c.p} in polynomial over F_{p}")


X2 = MultiPoly.gen("x2")
X3 = MultiPoly.gen("x3")
X4 = MultiPoly.gen("x4")


def specialize(q: MultiPoly, vals: Mapping, p) -> FieldElement:
    """Reduce ``q`` mod p and evaluate at ``vals`` (variable name -> F_p value)."""
    p = Prime(p)
    if q.modulus is None:
        try:
            q = q.reduce(p)
        except NotPIntegralError:
            raise NotPIntegralError(f"{q} has a coefficient that is not {int(p)}-integral")
    elif q.modulus != p:
        raise ValueError("polynomial reduced modulo a different prime")
    fvals = {k: FieldElement(v, p) for k, v in vals.items()}
    return FieldElement(q.evaluate(fvals), p)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(x[234])|(\^)|(\*)|([+-]))")


def parse_poly(text: str, modulus=None) -> MultiPoly:
    """Parse the text form produced by ``str(MultiPoly)``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected input at {text[pos:]!r}")
        tokens.append(next((i, g) for i, g in enumerate(m.groups()) if g is not None))
        pos = m.end()
    if not tokens:
        raise ValueError("empty polynomial")

    result = MultiPoly(modulus=modulus)
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == 4:
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ValueError("expected + or - between terms")
        first = False
        coeff = Fraction(sign)
        exp = [0] * NVARS
        expect_factor = True
        while i < len(tokens) and tokens[i][0] != 4:
            kind, val = tokens[i]
            if kind == 3:
                if expect_factor:
                    raise ValueError("misplaced '*'")
                expect_factor = True
                i += 1
                continue
            if not expect_factor:
                raise ValueError("missing '*' between factors")
            if kind == 0:
                coeff *= Fraction(val)
                i += 1
            elif kind == 1:
                k = 1
                if i + 1 < len(tokens) and tokens[i + 1][0] == 2:
                    if i + 2 >= len(tokens) or tokens[i + 2][0] != 0 or "/" in tokens[i + 2][1]:
                        raise ValueError("exponent must be a nonnegative integer")
                    k = int(tokens[i + 2][1])
                    i += 2
                exp[VARIABLES.index(val)] += k
                i += 1
            else:
                raise ValueError("misplaced '^'")
            expect_factor = False
        if expect_factor:
            raise ValueError("dangling operator")
        result = result + MultiPoly({tuple(exp): coeff}, modulus)
    return result


class PolynomialRing:
    """Q[x2, x3, x4] as a coefficient ring for truncated series."""

    def __init__(self, modulus=None):
        self.modulus = None if modulus is None else Prime(modulus)
        self.zero = MultiPoly(modulus=self.modulus)
        self.one = MultiPoly.constant(1, self.modulus)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("G4", self.modulus))

    def __repr__(self):
        return "PolynomialRing()" if self.modulus is None else f"PolynomialRing({int(self.modulus)})"

    def coerce(self, x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            if x.modulus != self.modulus:
                raise ValueError("polynomial over a different coefficient ring")
            return x
        return MultiPoly.constant(x, self.modulus)

    def reduce(self, x):
        return x

    def mul_trunc(self, a, b, n):
        return generic_mul_trunc(a, b, n, self.zero)
