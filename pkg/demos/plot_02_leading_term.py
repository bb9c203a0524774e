"""
Leading term of the p-th iterate
================================

For g = z + a2 z^3 + a3 z^4 + a4 z^5 over F_p, the p-th iterate differs
from z first at degree 2p + 3, and the coefficient there is a polynomial in
a2, a3 and a4.
"""

import random

from wildram import PrimeField, TruncatedSeries, iterate, predict_leading_term

p = 7
F = PrimeField(p)
rng = random.Random(0)

for _ in range(5):
    a2, a3, a4 = rng.randrange(1, p), rng.randrange(p), rng.randrange(p)
    g = TruncatedSeries([0, 1, 0, a2, a3, a4], F)
    exponent, predicted = predict_leading_term(g)
    # compute the iterate directly and compare
    h = iterate(g, p, exponent) - TruncatedSeries.identity(F)
    print((a2, a3, a4), exponent, predicted.residue, h[exponent])
