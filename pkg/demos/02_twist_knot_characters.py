"""
Twist-knot character varieties over finite fields
=================================================

For the twist knot J(2, 2n) the SL2 character variety is the curve
f_n(x, y) = 0 in trace coordinates.  This demo enumerates its points
mod p, builds an actual representation at an irreducible point, and
compares the Fox-calculus determinant ratio with the closed form.
"""

from iwaknot.twistknot import (
    TwistKnot,
    TraceCoordinates,
    classify_point,
    extension_field,
    build_rep,
    torsion_poly,
    twist_knot_presentation,
    mu_zero_scan,
    nonacyclic_points,
)
from iwaknot.errors import NoSquareRoot, ReduciblePoint
from iwaknot.foxcalc import wada_invariant
from iwaknot.laurent import format_poly

n, p = 2, 7
knot = TwistKnot(n)
print(f"J(2,{2 * n}) = {knot.name}, fibered: {knot.fibered}")

# classify every F_7 point of the plane: on the curve and irreducible,
# on the reducible locus x^2 - y - 2 = 0, or off the variety entirely
field = extension_field(p)
kinds = {}
for a in range(p):
    for b in range(p):
        pt = TraceCoordinates(field, field.coerce(a), field.coerce(b))
        kind = classify_point(n, pt).kind
        kinds[kind] = kinds.get(kind, 0) + 1
print("point census mod 7:", kinds)

# pick an irreducible point, build rho, and run Fox calculus on the
# two-generator presentation; the ratio matches a0 t^2 + a1 t + a0
pres = twist_knot_presentation(n)
for a in range(p):
    done = False
    for b in range(p):
        pt = TraceCoordinates(field, field.coerce(a), field.coerce(b))
        if classify_point(n, pt).kind != "Irreducible":
            continue
        try:
            rep = build_rep(pt)
        except (NoSquareRoot, ReduciblePoint):
            continue
        num, den = wada_invariant(pres, rep, 1)
        print(f"point (x, y) = ({a}, {b})")
        print("  numerator  =", format_poly(num))
        print("  denominator =", format_poly(den))
        print("  closed form =", format_poly(torsion_poly(n, pt)))
        done = True
        break
    if done:
        break

# the mu = 0 scan checks that no irreducible point kills the torsion
report = mu_zero_scan(n, p)
print(report.summary_line())

# non-acyclic points (torsion ratio vanishing at t = 1) are cut out by
# roots of unity of order dividing 3n - 1 = 5
pts = nonacyclic_points(n, 11)
print("non-acyclic points mod 11:",
      [(pt.domain.format(pt.x), pt.domain.format(pt.y)) for pt in pts])
