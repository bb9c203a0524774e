"""
Squaring the involution -z + z^2
================================

The square of an involution is tangent to the identity. Whether it is
2-ramified can be read off its first few coefficients, and the brute-force
ramification numbers agree.
"""

from wildram import classify_involution_square, parse_series, ramification_sequence, square
from wildram.exact import odd_primes_upto

# the square of f = -z + z^2 is z - 2z^3 + z^4 in every characteristic
f = parse_series("-z + z^2", 3)
print(square(f).to_str())

# over F_3 the ramification numbers are 2, 8, 26
report = ramification_sequence(square(f), 2)
print(report.values, report.two_ramified_pattern)

# the closed-form test fails at exactly one prime below 50
for p in odd_primes_upto(50):
    c = classify_involution_square(parse_series("-z + z^2", p))
    if not c.is_two_ramified:
        print("not 2-ramified at p =", p, c.reasons)
