"""
Resultant growth and the Mahler measure
=======================================

|Res(t^n - 1, f)| grows like M(f)^n, while the p-part of the same
resultants encodes the mu-invariant.  Both halves on two polynomials.
"""

import math

from iwaknot.laurent import parse_poly
from iwaknot.padic import asymptotic_check, growth_table_csv, mahler_measure

# archimedean half: the figure-eight polynomial has Mahler measure
# (3 + sqrt 5)/2, the square of the golden ratio
f = parse_poly("t^2-3*t+1")
golden = (3 + math.sqrt(5)) / 2
print(f"M(f) = {mahler_measure(f):.10f}  (exact: {golden:.10f})")

rows = asymptotic_check(f, 200, 2, step=1)
for row in rows:
    if row.n in (10, 50, 100, 200):
        print(f"n = {row.n:4d}: |r_n|^(1/n) = {row.root_growth:.6f}")

# p-adic half: a polynomial with content 2^4 keeps its 2-part pinned at
# 2^-4 along n = 2^r, which is exactly mu = 4
g = parse_poly("112*t^2+208*t+112")
by_n = {row.n: row for row in asymptotic_check(g, 16, 2)}
for n in (1, 2, 4, 8, 16):
    print(f"n = {n:2d}: 2-part = {by_n[n].p_part}")

# the CSV table feeds external plotting tools
print()
print(growth_table_csv(rows[:5]))
