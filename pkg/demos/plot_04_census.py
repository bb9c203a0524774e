"""
Census over F_5
===============

Every g = z + a2 z^3 + a3 z^4 + a4 z^5 with a2 != 0 is classified by the
closed form and by brute force. The two always agree.
"""

import collections
import sys

from wildram.census import census, write_csv

rows = list(census(5))
print(len(rows), "rows, all agree:", all(r.agreement for r in rows))
print(collections.Counter(r.verdict for r in rows))

# rows that fail the test only get a lower bound on i_1, above 2(1 + p) = 12
print(sorted({r.i1 for r in rows if r.verdict != "two-ramified"}))

write_csv(rows[:5], sys.stdout)
