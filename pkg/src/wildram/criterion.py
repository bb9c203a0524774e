"""Closed-form tests for 2-ramification.

For g(z) = z(1 + a1 z + a2 z^2 + a3 z^3 + a4 z^4 + ...) over F_p, p odd,
g is 2-ramified exactly when a1 = 0, a2 != 0 and
3/2 a2^3 + a3^2 - a2 a4 != 0.  Only degrees 2 through 5 of g are read.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InsufficientPrecisionError, LinearCoefficientError, NonZeroConstantTermError
from .exact import FieldElement, PrimeField
from .series import TruncatedSeries, compose


class Verdict(str, Enum):
    TWO_RAMIFIED = "two-ramified"
    NOT_TWO_RAMIFIED = "not-two-ramified"
    REJECTED = "rejected"


# reason clauses
A1_NONZERO = "a1_nonzero"
A2_ZERO = "a2_zero"
CRITERION_ZERO = "criterion_zero"
IDENTITY = "identity"
P_EVEN = "p_even"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    criterion_value: FieldElement | None
    reasons: tuple = field(default_factory=tuple)
    p: int | None = None

    @property
    def is_two_ramified(self) -> bool:
        return self.verdict is Verdict.TWO_RAMIFIED

    def as_dict(self) -> dict:
        return {
            "p": None if self.p is None else int(self.p),
            "verdict": self.verdict.value,
            "criterion_value": None if self.criterion_value is None else int(self.criterion_value),
            "reasons": list(self.reasons),
        }


def rejected(p, reason=P_EVEN) -> Classification:
    return Classification(Verdict.REJECTED, None, (reason,), p)


def _field_of(s: TruncatedSeries) -> PrimeField:
    if not isinstance(s.ring, PrimeField):
        raise TypeError("series must have coefficients in F_p")
    s.ring.p.require_odd()
    return s.ring


def _coefficients(s: TruncatedSeries, linear: int) -> list[FieldElement]:
    """[a1, a2, a3, a4] read from degrees 2..5, after checking the shape z(linear + ...)."""
    F = _field_of(s)
    if s.precision < 5:
        raise InsufficientPrecisionError("need coefficients up to degree 5")
    if s[0]:
        raise NonZeroConstantTermError("series must fix the origin")
    if s[1] != linear % F.p:
        raise LinearCoefficientError(f"linear coefficient must be {linear}")
    return [F.element(s[k]) for k in range(2, 6)]


def criterion_value(a2, a3, a4) -> FieldElement:
    """3/2 a2^3 + a3^2 - a2 a4 in F_p."""
    p = a2.p
    return FieldElement(3, p) / 2 * a2 ** 3 + a3 * a3 - a2 * a4


def classify_two_ramified(g: TruncatedSeries) -> Classification:
    a1, a2, a3, a4 = _coefficients(g, 1)
    p = a2.p
    value = criterion_value(a2, a3, a4)
    reasons = []
    if g.is_exact and g.coeffs == (0, 1):
        reasons.append(IDENTITY)
    if a1:
        reasons.append(A1_NONZERO)
    if not a2:
        reasons.append(A2_ZERO)
    if not value:
        reasons.append(CRITERION_ZERO)
    verdict = Verdict.NOT_TWO_RAMIFIED if reasons else Verdict.TWO_RAMIFIED
    return Classification(verdict, value, tuple(reasons), p)


def predict_leading_term(g: TruncatedSeries) -> tuple[int, FieldElement]:
    """(2p + 3, a2^(p-2) (3/2 a2^3 + a3^2 - a2 a4)).

    For a1 = 0 the coefficients of z^(2p+1) and z^(2p+2) in g^p - z vanish
    and the returned value is the coefficient of z^(2p+3).
    """
    a1, a2, a3, a4 = _coefficients(g, 1)
    if a1:
        raise ValueError("prediction requires a1 = 0")
    p = a2.p
    return 2 * p + 3, a2 ** (p - 2) * criterion_value(a2, a3, a4)


def corollary_value(a1, a2, a3, a4) -> FieldElement:
    """(a1^2 + a2)(11 a1^4 + 25 a1^2 a2 + 12 a1 a3 + 6 a2^2 + 4 a4) in F_p."""
    return (a1 * a1 + a2) * (11 * a1 ** 4 + 25 * a1 * a1 * a2 + 12 * a1 * a3
                             + 6 * a2 * a2 + 4 * a4)


def expand_involution_square(f: TruncatedSeries) -> TruncatedSeries:
    """f∘f to degree 5 for f(z) = z(-1 + a1 z + a2 z^2 + a3 z^3 + a4 z^4 + ...).

    f∘f = z - 2(a1^2 + a2) z^3 + (a1^3 + a1 a2) z^4
            + (3 a2^2 - 6 a1 a3 - a1^2 a2 - 2 a4) z^5 + O(z^6)
    """
    a1, a2, a3, a4 = _coefficients(f, -1)
    coeffs = [0, 1, 0,
              -2 * (a1 * a1 + a2),
              a1 ** 3 + a1 * a2,
              3 * a2 * a2 - 6 * a1 * a3 - a1 * a1 * a2 - 2 * a4]
    return TruncatedSeries(coeffs, f.ring, precision=5)


def classify_involution_square(f: TruncatedSeries) -> Classification:
    """Whether f∘f is 2-ramified, for f with linear coefficient -1."""
    a1, a2, a3, a4 = _coefficients(f, -1)
    value = corollary_value(a1, a2, a3, a4)
    reasons = []
    if not (a1 * a1 + a2):
        reasons.append(A2_ZERO)
    if not value:
        reasons.append(CRITERION_ZERO)
    if f.is_exact and f.coeffs == (0, f.ring.p - 1):
        reasons.insert(0, IDENTITY)
    verdict = Verdict.NOT_TWO_RAMIFIED if reasons else Verdict.TWO_RAMIFIED
    return Classification(verdict, value, tuple(reasons), a1.p)


def square(f: TruncatedSeries, precision=None) -> TruncatedSeries:
    return compose(f, f, precision)
