"""Exhaustive sweep of z + a1 z^2 + a2 z^3 + a3 z^4 + a4 z^5 over F_p.

Each row sets the closed-form verdict beside the brute-force i_0 and i_1.
"""

from __future__ import annotations

import csv
import itertools
from dataclasses import asdict, dataclass

from .criterion import classify_two_ramified
from .exact import PrimeField, odd_prime
from .ramification import ramification_sequence, working_precision
from .series import TruncatedSeries

CSV_HEADER = ["p", "a1", "a2", "a3", "a4", "i0", "i0_exact", "i1", "i1_exact",
              "verdict", "criterion_value", "agreement"]

DEFAULT_CAP = 5000


class CensusTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CensusRow:
    p: int
    a1: int
    a2: int
    a3: int
    a4: int
    i0: int
    i0_exact: bool
    i1: int
    i1_exact: bool
    verdict: str
    criterion_value: int
    agreement: bool

    def as_csv(self) -> list[str]:
        return [str(v).lower() if isinstance(v, bool) else str(v)
                for v in asdict(self).values()]


def census_series(p, a1, a2, a3, a4) -> TruncatedSeries:
    return TruncatedSeries([0, 1, a1, a2, a3, a4], PrimeField(p))


def census_size(p: int, with_a1: bool = False) -> int:
    return (p - 1) * p * p * (p if with_a1 else 1)


def census_row(p, a1, a2, a3, a4) -> CensusRow:
    g = census_series(p, a1, a2, a3, a4)
    cls = classify_two_ramified(g)
    rep = ramification_sequence(g, 1, precision=working_precision(p, 1))
    lv0, lv1 = rep.levels
    target = 2 * (1 + p)
    # a lower bound is >= the working precision, which exceeds target
    brute = lv1.exact and lv1.i == target
    return CensusRow(p, a1, a2, a3, a4, int(lv0.i), lv0.exact, int(lv1.i), lv1.exact,
                     cls.verdict.value, int(cls.criterion_value),
                     cls.is_two_ramified == brute)


def census(p, with_a1: bool = False, cap: int = DEFAULT_CAP):
    """Yield rows in lexicographic order of (a1, a2, a3, a4), a2 != 0."""
    p = int(odd_prime(p))
    size = census_size(p, with_a1)
    if size > cap:
        raise CensusTooLarge(f"census for p={p} has {size} rows, above the cap of {cap}")
    a1_range = range(p) if with_a1 else (0,)
    for a1, a2, a3, a4 in itertools.product(a1_range, range(1, p), range(p), range(p)):
        yield census_row(p, a1, a2, a3, a4)


def write_csv(rows, stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow(row.as_csv())
