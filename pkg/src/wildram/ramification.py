"""Lower ramification numbers by brute-force iteration over F_p.

i_n(g) = ord(g^{p^n}(z) - z) - 1.  Each p^n-fold iterate is built as n
successive p-fold iterations at one fixed working precision; when the
difference vanishes to that precision the level is reported as a lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import HypothesisError, LinearCoefficientError, NonZeroConstantTermError
from .exact import Prime, PrimeField
from .series import TruncatedSeries, iterate, order


def geometric_sum(p: int, n: int) -> int:
    """1 + p + ... + p^n."""
    return sum(p ** k for k in range(n + 1))


def working_precision(p: int, n: int) -> int:
    return 2 * geometric_sum(p, n) + 2


@dataclass(frozen=True)
class RamificationLevel:
    n: int
    i: int | float
    exact: bool
    identity: bool = False

    def as_dict(self, sen=None) -> dict:
        return {"n": self.n, "i": None if self.identity else int(self.i),
                "exact": self.exact, "sen": sen, "identity": self.identity}


@dataclass
class RamificationReport:
    p: int
    levels: list[RamificationLevel]
    series_description: str = ""
    precision: int = 0
    sen: list = field(default_factory=list)

    @property
    def values(self) -> list:
        return [lv.i for lv in self.levels]

    @property
    def two_ramified_pattern(self) -> bool:
        """All levels exact and equal to 2(1 + p + ... + p^n)."""
        return all(lv.exact and not lv.identity and lv.i == 2 * geometric_sum(self.p, lv.n)
                   for lv in self.levels)

    def as_dict(self) -> dict:
        return {
            "p": int(self.p),
            "series": self.series_description,
            "precision": self.precision,
            "levels": [lv.as_dict(s) for lv, s in zip(self.levels, self.sen)],
            "two_ramified_pattern": self.two_ramified_pattern,
        }


def _check_tangent(g: TruncatedSeries) -> Prime:
    if not isinstance(g.ring, PrimeField):
        raise TypeError("ramification numbers need a series over F_p")
    if g[0]:
        raise NonZeroConstantTermError("g(0) must be 0")
    if g[1] != 1:
        raise LinearCoefficientError("g must be tangent to the identity (linear coefficient 1)")
    return g.ring.p


def _is_identity(g: TruncatedSeries) -> bool:
    return g.is_exact and g.coeffs == (0, 1)


def _level_from_iterate(h: TruncatedSeries, n: int, precision: int) -> RamificationLevel:
    d = h - TruncatedSeries.identity(h.ring)
    o = order(d)
    if o.lower_bound:
        # ord > precision, so i_n >= precision
        return RamificationLevel(n, precision, exact=False)
    return RamificationLevel(n, int(o.value) - 1, exact=True)


def _levels(g: TruncatedSeries, n_max: int, precision: int) -> list[RamificationLevel]:
    p = _check_tangent(g)
    if _is_identity(g):
        return [RamificationLevel(k, math.inf, exact=True, identity=True)
                for k in range(n_max + 1)]
    h = g.truncate(precision)
    levels = [_level_from_iterate(h, 0, precision)]
    for k in range(1, n_max + 1):
        h = iterate(h, p, precision)
        levels.append(_level_from_iterate(h, k, precision))
    return levels


def lower_ramification(g: TruncatedSeries, n: int, precision: int | None = None
                       ) -> RamificationLevel:
    """i_n(g) with an exactness flag.

    ``precision`` defaults to 2(1 + p + ... + p^n) + 2, enough to see the
    2-ramified value.  If ``g`` is itself truncated its own precision caps
    the working precision.
    """
    if n < 0:
        raise ValueError("level must be nonnegative")
    p = _check_tangent(g)
    if precision is None:
        precision = working_precision(p, n)
    precision = int(min(precision, g.precision))
    return _levels(g, n, precision)[n]


def sen_check(levels, p=None) -> list[bool]:
    """Sen's congruence i_n ≡ i_{n-1} (mod p^n) for each level n >= 1.

    ``levels`` is a :class:`RamificationReport` or a sequence i_0, i_1, ...
    Level 0 is vacuously true.
    """
    if isinstance(levels, RamificationReport):
        p = levels.p
        levels = levels.values
    if p is None:
        raise ValueError("p is required")
    out = [True] if levels else []
    for n in range(1, len(levels)):
        out.append((levels[n] - levels[n - 1]) % p ** n == 0)
    return out


def _report_sen(levels: list[RamificationLevel], p: int) -> list:
    out = []
    for n, lv in enumerate(levels):
        if lv.identity or not lv.exact:
            out.append(None)
        elif n == 0:
            out.append(True)
        elif not levels[n - 1].exact:
            out.append(None)
        else:
            out.append((lv.i - levels[n - 1].i) % p ** n == 0)
    return out


def ramification_sequence(g: TruncatedSeries, n_max: int = 2, precision: int | None = None,
                          description: str | None = None) -> RamificationReport:
    p = _check_tangent(g)
    if precision is None:
        precision = working_precision(p, n_max)
    precision = int(min(precision, g.precision))
    levels = _levels(g, n_max, precision)
    return RamificationReport(
        p=p, levels=levels,
        series_description=description if description is not None else g.to_str(),
        precision=precision, sen=_report_sen(levels, p))


def laubie_saine_extrapolate(i0: int, i1: int, p: int, n: int) -> int:
    """i_n = i_0 + (p^n - 1)/(p - 1) (i_1 - i_0), valid when p ∤ i_0 and i_1 < (p^2-p+1) i_0."""
    p = Prime(p)
    if n < 0:
        raise ValueError("level must be nonnegative")
    if i0 % p == 0:
        raise HypothesisError("p_divides_i0", f"p = {int(p)} divides i0 = {i0}")
    if not i1 < (p * p - p + 1) * i0:
        raise HypothesisError("i1_too_large",
                              f"i1 = {i1} is not below (p^2-p+1) i0 = {(p * p - p + 1) * i0}")
    return i0 + (p ** n - 1) // (p - 1) * (i1 - i0)
