"""
The A, B, C recurrence over Q[x2, x3, x4]
=========================================

Iterating the difference operator on z + x2 z^3 + x3 z^4 + x4 z^5 produces
three tracked coefficients per step. Their closed forms are checked against
the iteration and then reduced at m = p.
"""

from wildram import PolynomialRing, TruncatedSeries, delta
from wildram.polyring import X2, X3, X4
from wildram.recurrence import abc_closed, abc_iterate, c_p_reduction

R = PolynomialRing()
g = TruncatedSeries([0, 1, 0, X2, X3, X4], R)
print(delta(g, 2, 7).to_str())

for m in range(1, 6):
    s = abc_closed(m)
    print(m, s == abc_iterate(m), "C =", s.C)

# at m = p the first two vanish and the third is the criterion times x2^(p-2)
for p in (3, 5, 7):
    s = abc_closed(p)
    print(p, s.A.reduce(p), s.B.reduce(p), c_p_reduction(p))
