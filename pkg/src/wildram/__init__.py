"""Lower ramification numbers of power series tangent to the identity over F_p.

Exact arithmetic throughout: residues mod p, :class:`fractions.Fraction`
rationals with p-adic valuation, and polynomials in x2, x3, x4.
"""

from .exact import (FieldElement, Prime, PrimeField, RationalField, field_inv,
                    is_prime, padic_valuation, reduce_mod_p)
from .polyring import X2, X3, X4, MultiPoly, PolynomialRing, parse_poly, specialize
from .series import (SeriesOrder, TruncatedSeries, compose, delta, iterate, order,
                     parse_series)
from .identities import (double_factorial, r_closed, r_sum, s_sum, t_closed, t_sum,
                         verify_identities, wilson_constant)
from .recurrence import (AbcState, DiffEq, abc_closed, abc_iterate, abc_step,
                         c_p_reduction, iterate_linear, solve_linear)
from .ramification import (RamificationLevel, RamificationReport, laubie_saine_extrapolate,
                           lower_ramification, ramification_sequence, sen_check)
from .criterion import (Classification, Verdict, classify_involution_square,
                        classify_two_ramified, expand_involution_square,
                        predict_leading_term, square)

__version__ = "0.1.0"
