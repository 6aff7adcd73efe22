"""
The figure-eight knot and its cover tower
=========================================

Walk through the classical Alexander polynomial of 4_1, the valuations
of its cyclic resultants, and the lambda/mu/nu triple that those
valuations obey once the tower stabilizes.
"""

from iwaknot.laurent import parse_poly, cyclic_resultant, substitute_shift, format_poly
from iwaknot.iwasawa import iwasawa_lambda_mu, nu_estimate
from iwaknot.padic import valuation

# the Alexander polynomial of the figure-eight knot
f = parse_poly("t^2-3*t+1")
print("f =", format_poly(f))

# expanding at t = 1 + T shows the distinguished part directly
print("f(1+T) =", format_poly(substitute_shift(f), var="T"))

# cyclic resultants r_n = Res(t^n - 1, f) grow fast; their 5-adic
# valuations are what the tower sees
for n in (2, 10, 50):
    value, _ = cyclic_resultant(f, n)
    print(f"r_{n} = {value}   v_5 = {valuation(value, 5).value}")

# lambda and mu of the Z/mZ x Z_5 tower: m = 1 sees nothing, m = 2
# brings in the roots since they become 5-adically close to roots of unity
for m in (1, 2, 4):
    lam, mu = iwasawa_lambda_mu(f, 5, m)
    print(f"m = {m}: lambda = {lam}, mu = {mu}")

# e_r = v_5(r at level m 5^r) follows e_r = lambda r + mu 5^r + nu once
# r is large enough; nu_estimate extracts the triple and its witness table
triple = nu_estimate(f, 5, 2, (1, 3))
print("lambda, mu, nu =", (triple.lam, triple.mu, triple.nu))
for r, e, flagged in triple.e_table:
    print(f"  r = {r}: e_r = {e}" + ("  (shared roots with t^n-1)" if flagged else ""))
