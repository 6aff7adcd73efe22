"""Twist knots J(2, 2n), their SL2 character varieties, and torsion formulas.

The knot group is pi = <a, b | a w^n = w^n b> with w = a b^-1 a^-1 b.
An SL2 representation is determined up to conjugacy by the traces
x = tr rho(a), y = tr rho(ab); the trace of w is
z = 2x^2 - x^2 y + y^2 - 2, and (x, y) lies on the character variety
of irreducible representations exactly when

    f_n(x, y) = (y - 1) S_n(z) - S_{n-1}(z) = 0,   x^2 - y - 2 != 0,

where S_k is the Chebyshev-like sequence S_0 = 0, S_1 = 1,
S_{k+1} = z S_k - S_{k-1}.  At such a point the torsion is the
palindromic quadratic a0 t^2 + a1 t + a0 with

    a0 = (S_{n+1}(z) - S_{n-1}(z) - 2) / (z - 2)   (exact in Z[z]),
    a1 = x (S_n(z) - a0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .domains import (
    ZZ,
    CoefficientDomain,
    PrimeField,
    QuadraticField,
    QuadraticRing,
    Rationals,
    is_prime,
    smallest_nonresidue,
)
from .errors import (
    InexactDivision,
    NotIrreducible,
    NoSquareRoot,
    PrecondFailed,
    ReduciblePoint,
)
from .foxcalc import MatrixRep, Presentation, parse_word
from .laurent import LaurentPoly, derivative, format_poly
from .reports import FAIL, INFO, PASS, ScanReport

TWIST_KNOT_NAMES = {0: "0_1", 1: "3_1", -1: "4_1", 2: "5_2"}


@dataclass(frozen=True)
class TwistKnot:
    n: int

    @property
    def fibered(self) -> bool:
        return self.n in (0, 1, -1)

    @property
    def name(self) -> str:
        return TWIST_KNOT_NAMES.get(self.n, f"J(2,{2 * self.n})")


@dataclass(frozen=True)
class TraceCoordinates:
    domain: CoefficientDomain
    x: object
    y: object

    @property
    def z(self):
        """tr rho(w) = 2x^2 - x^2 y + y^2 - 2, recomputed on demand."""
        d = self.domain
        x2 = d.mul(self.x, self.x)
        y2 = d.mul(self.y, self.y)
        two = d.coerce(2)
        return d.sub(
            d.add(d.sub(d.mul(two, x2), d.mul(x2, self.y)), y2), two
        )

    @property
    def discriminant(self):
        """x^2 - y - 2; zero exactly on the reducible locus."""
        d = self.domain
        return d.sub(d.sub(d.mul(self.x, self.x), self.y), d.coerce(2))


IRREDUCIBLE = "Irreducible"
REDUCIBLE_NONABELIAN = "ReducibleNonabelian"
OFF_VARIETY = "OffVariety"


@dataclass(frozen=True)
class PointClass:
    kind: str
    riley_value: object
    discriminant: object


# ---------------------------------------------------------------------------
# Chebyshev-like recursion
# ---------------------------------------------------------------------------

def chebyshev(k: int, z, domain: CoefficientDomain = ZZ):
    """S_k at z: S_0 = 0, S_1 = 1, S_{k+1} = z S_k - S_{k-1}, S_{-k} = -S_k.

    z may be a domain element or a LaurentPoly (symbolic in z).
    """
    symbolic = isinstance(z, LaurentPoly)
    d = z.domain if symbolic else domain
    if symbolic:
        zero, one = LaurentPoly.zero(d), LaurentPoly.one(d)
        mul = lambda a, b: a * b
        sub = lambda a, b: a - b
        neg = lambda a: -a
    else:
        z = d.coerce(z)
        zero, one = d.zero, d.one
        mul, sub, neg = d.mul, d.sub, d.neg
    if k < 0:
        val = chebyshev(-k, z, domain)
        return -val if symbolic else neg(val)
    prev, cur = zero, one  # S_0, S_1
    if k == 0:
        return zero
    for _ in range(k - 1):
        prev, cur = cur, sub(mul(z, cur), prev)
    return cur


def chebyshev_poly(k: int) -> LaurentPoly:
    """S_k as a polynomial in z over Z."""
    return chebyshev(k, LaurentPoly.from_coeffs(ZZ, [0, 1]))


def riley_fn(n: int, pt: TraceCoordinates):
    """f_n(x, y) = (y - 1) S_n(z) - S_{n-1}(z)."""
    d = pt.domain
    z = pt.z
    sn = chebyshev(n, z, d)
    sn1 = chebyshev(n - 1, z, d)
    return d.sub(d.mul(d.sub(pt.y, d.one), sn), sn1)


# ---------------------------------------------------------------------------
# torsion coefficients
# ---------------------------------------------------------------------------

def a0_polynomial(n: int) -> LaurentPoly:
    """(S_{n+1} - S_{n-1} - 2) / (z - 2) as an exact quotient in Z[z]."""
    num = chebyshev_poly(n + 1) - chebyshev_poly(n - 1) - LaurentPoly.from_coeffs(ZZ, [2])
    if num.is_zero:
        return num
    # synthetic division by the monic linear z - 2
    if num.min_exp < 0:
        raise InexactDivision("unexpected Laurent term in the a0 numerator")
    coeffs = [int(num.coeff(e)) for e in range(num.max_exp + 1)]
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + 2 * carry
        out[i - 1] = carry
    if coeffs[0] + 2 * carry != 0:
        raise InexactDivision("z - 2 does not divide the a0 numerator")
    return LaurentPoly.from_coeffs(ZZ, out)


def tran_coefficients(n: int, pt: TraceCoordinates) -> tuple:
    """(a0, a1) evaluated exactly at the point's (x, y)."""
    d = pt.domain
    z = pt.z
    a0_poly = a0_polynomial(n)
    a0 = _eval_int_poly(a0_poly, z, d)
    a1 = d.mul(pt.x, d.sub(chebyshev(n, z, d), a0))
    return a0, a1


def _eval_int_poly(f: LaurentPoly, z, d: CoefficientDomain):
    """Horner evaluation of an integer polynomial at a domain element."""
    if f.is_zero:
        return d.zero
    acc = d.zero
    for e in range(f.max_exp, -1, -1):
        acc = d.add(d.mul(acc, z), d.coerce(int(f.coeff(e))))
    return acc


def torsion_poly(n: int, pt: TraceCoordinates) -> LaurentPoly:
    """a0 t^2 + a1 t + a0 at an irreducible character-variety point."""
    cls = classify_point(n, pt)
    if cls.kind != IRREDUCIBLE:
        raise NotIrreducible(f"point classified {cls.kind}")
    a0, a1 = tran_coefficients(n, pt)
    return LaurentPoly.from_terms(pt.domain, [(2, a0), (1, a1), (0, a0)])


def classical_alexander(n: int) -> tuple:
    """(delta0, delta1) = (t - 1, n t^2 - (2n - 1) t + n) over Z."""
    delta0 = LaurentPoly.from_coeffs(ZZ, [-1, 1])
    delta1 = LaurentPoly.from_coeffs(ZZ, [n, -(2 * n - 1), n])
    return delta0, delta1


def reducible_torsion(n: int, x, domain: CoefficientDomain = ZZ) -> tuple:
    """Torsion pair of the nonabelian reducible representation with trace x.

    delta0 = t^2 - x t + 1 and delta1 is the palindromic quartic
    n^2 t^4 + n(2n-1) t^3 + ((2n-1)^2 + n(2n-1) x) t^2 + n(2n-1) t + n^2.
    """
    d = domain
    x = d.coerce(x)
    delta0 = LaurentPoly.from_terms(d, [(2, d.one), (1, d.neg(x)), (0, d.one)])
    c = d.coerce(n * (2 * n - 1))
    mid = d.add(d.coerce((2 * n - 1) ** 2), d.mul(c, x))
    delta1 = LaurentPoly.from_terms(
        d, [(4, d.coerce(n * n)), (3, c), (2, mid), (1, c), (0, d.coerce(n * n))]
    )
    return delta0, delta1


def kappa_divisor_branch(n: int, x, domain: CoefficientDomain):
    """(t - kappa)-divisor alternative when kappa + kappa^-1 = x solves in domain.

    Returns the list of (kappa, delta1 / leading-normalization witness)
    candidates; empty when no kappa exists in the domain.
    """
    out = []
    for s in _quadratic_roots(domain, x):
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# classification and scans
# ---------------------------------------------------------------------------

def classify_point(n: int, pt: TraceCoordinates) -> PointClass:
    d = pt.domain
    fn = riley_fn(n, pt)
    disc = pt.discriminant
    if d.is_zero(disc):
        kind = REDUCIBLE_NONABELIAN
    elif d.is_zero(fn):
        kind = IRREDUCIBLE
    else:
        kind = OFF_VARIETY
    return PointClass(kind=kind, riley_value=fn, discriminant=disc)


def extension_field(p: int) -> QuadraticField:
    return QuadraticField(p)


def _unit_root_trace(d, c, order: int) -> bool:
    """Does alpha with alpha + alpha^-1 = c satisfy alpha^order = 1?

    Works in d[alpha] / (alpha^2 - c alpha + 1), which covers alpha in
    the quadratic extension of d; elements are pairs u0 + u1 alpha.
    """
    res = (d.one, d.zero)
    base = (d.zero, d.one)
    k = order

    def mul(a, b):
        # alpha^2 = c alpha - 1
        hi = d.mul(a[1], b[1])
        lo = d.sub(d.mul(a[0], b[0]), hi)
        mid = d.add(d.add(d.mul(a[0], b[1]), d.mul(a[1], b[0])), d.mul(c, hi))
        return (lo, mid)

    while k:
        if k & 1:
            res = mul(res, base)
        base = mul(base, base)
        k >>= 1
    return res == (d.one, d.zero)


def nonacyclic_points(n: int, p: int) -> list:
    """All x = y = 1 - alpha - alpha^-1 with alpha^(3n-1) = 1, alpha != +-1.

    alpha runs over the roots of unity in the algebraic closure whose
    trace alpha + alpha^-1 lands in F_{p^2} (so alpha itself may sit in
    F_{p^4}); the returned coordinates live in the quadratic extension,
    with base-field points listed first.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    order = abs(3 * n - 1)
    ext = extension_field(p)
    two = ext.coerce(2)
    points = []
    for c in ext.elements():
        if c == two or c == ext.neg(two):
            continue  # alpha = +-1
        if not _unit_root_trace(ext, c, order):
            continue
        x = ext.sub(ext.one, c)
        points.append(TraceCoordinates(ext, x, x))
    points.sort(key=lambda pt: (not ext.in_base_field(pt.x), pt.x))
    return points


def _field_pairs(field, limit=None):
    count = 0
    for x in field.elements():
        for y in field.elements():
            yield x, y
            count += 1
            if limit is not None and count >= limit:
                return


def mu_zero_scan(n: int, p: int, ext_sample: int = 400) -> ScanReport:
    """Exhaustive mod-p scan of the mu = 0 criterion on the variety f_n = 0.

    At absolutely irreducible points (a0, a1) != (0, 0) forces the
    torsion to stay nonzero mod p; at reducible nonabelian points the
    explicit pair must be nonzero mod p with unit leading coefficient.
    """
    report = ScanReport("mu_zero_scan", {"n": n, "p": p, "ext_sample": ext_sample})
    base = PrimeField(p)
    ext = extension_field(p)
    if (3 * n - 1) % p == 0:
        report.add_row(INFO, note=f"p | 3n-1 = {3 * n - 1}: residually reducible edge")
    for field, limit in [(base, None), (ext, ext_sample)]:
        kept = 0
        for x, y in _field_pairs(field):
            pt = TraceCoordinates(field, x, y)
            cls = classify_point(n, pt)
            if cls.kind == OFF_VARIETY:
                continue
            if limit is not None:
                kept += 1
                if kept > limit:
                    break
            if cls.kind == IRREDUCIBLE:
                # classification is absolute: x^2-y-2 != 0 persists upstairs
                a0, a1 = tran_coefficients(n, pt)
                ok = not (field.is_zero(a0) and field.is_zero(a1))
                report.add_row(
                    PASS if ok else FAIL,
                    point=(field.format(x), field.format(y)),
                    field="F_p" if field is base else "F_p^2",
                    kind=cls.kind,
                    a0=field.format(a0),
                    a1=field.format(a1),
                )
            else:
                d0, d1 = reducible_torsion(n, x, field)
                ok = not d0.is_zero and not d1.is_zero
                report.add_row(
                    PASS if ok else FAIL,
                    point=(field.format(x), field.format(y)),
                    field="F_p" if field is base else "F_p^2",
                    kind=cls.kind,
                    delta1=format_poly(d1),
                )
    return report


def residually_reducible_report(n: int, p: int) -> ScanReport:
    """Checks at the residually reducible points (+-1, -1) when p | 3n - 1."""
    if (3 * n - 1) % p != 0:
        raise PrecondFailed(f"p = {p} does not divide 3n - 1 = {3 * n - 1}")
    report = ScanReport("residually_reducible", {"n": n, "p": p})
    base = PrimeField(p)
    for sign in (1, -1):
        x = base.coerce(sign)
        y = base.coerce(-1)
        pt = TraceCoordinates(base, x, y)
        fn = riley_fn(n, pt)
        disc = pt.discriminant
        a0, a1 = tran_coefficients(n, pt)
        tau1 = base.add(base.add(a0, a0), a1)
        expected = (n * n + n) if sign == 1 else (-3 * n * n + n)
        rows_ok = [
            ("riley_vanishes", base.is_zero(fn)),
            ("reducible_locus", base.is_zero(disc)),
            ("tau_at_1_matches", tau1 == base.coerce(expected)),
            ("a_pair_nonzero", not (base.is_zero(a0) and base.is_zero(a1))),
        ]
        for label, ok in rows_ok:
            report.add_row(
                PASS if ok else FAIL,
                point=(sign, -1),
                check=label,
                tau1=base.format(tau1),
            )
    nx, ny = singular_numerators(n, base.coerce(-1), base)
    report.add_row(
        PASS if base.is_zero(nx) and base.is_zero(ny) else FAIL,
        point=(-1, -1),
        check="singular_gradient_numerators",
        values=(base.format(nx), base.format(ny)),
    )
    # exact integer values over Q, for the record (not reduced mod p)
    q = Rationals()
    for sign in (1, -1):
        pt = TraceCoordinates(q, Fraction(sign), Fraction(-1))
        a0, a1 = tran_coefficients(n, pt)
        report.add_row(
            INFO,
            point=(sign, -1),
            tau1_exact=str(2 * a0 + a1),
        )
    return report


def singular_numerators(n: int, xi, domain: CoefficientDomain) -> tuple:
    """Numerators of the diagonal derivative formulas of f_n at x = y = xi.

    On the diagonal the derivatives of the (normalized) defining
    function take the shape N / ((xi+1) xi (xi-2) (xi-3)) with

        N_x = 2 (n xi^2 - 2n xi - 1),
        N_y = 2 ((2n-1) xi^2 + (2-4n) xi + 1).

    At xi = -1 these equal 2(3n-1) and 4(3n-1), so both vanish mod p
    exactly when p | 3n-1: the point (-1,-1) is then a singular point
    of the variety and Hensel lifting fails there.
    """
    d = domain
    xi = d.coerce(xi)
    xi2 = d.mul(xi, xi)
    nn = d.coerce(n)
    two = d.coerce(2)
    nx = d.mul(two, d.sub(d.mul(nn, d.sub(xi2, d.mul(two, xi))), d.one))
    c2 = d.coerce(2 * n - 1)
    c1 = d.coerce(2 - 4 * n)
    ny = d.mul(two, d.add(d.add(d.mul(c2, xi2), d.mul(c1, xi)), d.one))
    return nx, ny


def riley_gradient(n: int, pt: TraceCoordinates) -> tuple:
    """(df/dx, df/dy) of f_n as a bivariate polynomial, by the chain rule.

    With g(z) = (y - 1) S_n(z) - S_{n-1}(z):
      df/dx = g'(z) (4x - 2xy),  df/dy = S_n(z) + g'(z) (2y - x^2).
    """
    d = pt.domain
    z = pt.z
    sn = chebyshev_poly(n)
    sn1 = chebyshev_poly(n - 1)
    dsn = _eval_int_poly(derivative(sn), z, d)
    dsn1 = _eval_int_poly(derivative(sn1), z, d)
    gprime = d.sub(d.mul(d.sub(pt.y, d.one), dsn), dsn1)
    x, y = pt.x, pt.y
    two, four = d.coerce(2), d.coerce(4)
    dzdx = d.sub(d.mul(four, x), d.mul(d.mul(two, x), y))
    dzdy = d.sub(d.mul(two, y), d.mul(x, x))
    dfdx = d.mul(gprime, dzdx)
    dfdy = d.add(chebyshev(n, z, d), d.mul(gprime, dzdy))
    return dfdx, dfdy


# ---------------------------------------------------------------------------
# explicit matrices for the Fox oracle
# ---------------------------------------------------------------------------

def _quadratic_roots(d: CoefficientDomain, x):
    """Solutions of s^2 - x s + 1 = 0 in the domain."""
    roots = []
    if hasattr(d, "elements"):
        for s in d.elements():
            if d.is_zero(d.add(d.sub(d.mul(s, s), d.mul(x, s)), d.one)):
                roots.append(s)
        return roots
    if isinstance(d, Rationals):
        disc = x * x - 4
        if disc >= 0:
            num, den = disc.numerator, disc.denominator
            rn, rd = math.isqrt(num), math.isqrt(den)
            if rn * rn == num and rd * rd == den:
                r = Fraction(rn, rd)
                roots = [(x + r) / 2, (x - r) / 2]
                return sorted(set(roots))
        return []
    if isinstance(d, QuadraticRing):
        bound = sum(abs(c) for c in x) + 3
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                s = (a, b)
                val = d.add(d.sub(d.mul(s, s), d.mul(x, s)), d.one)
                if d.is_zero(val):
                    roots.append(s)
        return roots
    return []


def build_rep(pt: TraceCoordinates) -> MatrixRep:
    """rho(a) = [[s, 1], [0, s^-1]], rho(b) = [[s, 0], [u, s^-1]].

    s satisfies s + s^-1 = x; u = y - x^2 + 2.  tr rho(a) = x and
    tr rho(ab) = y by construction.
    """
    d = pt.domain
    u = d.add(pt.discriminant, d.zero)
    u = d.neg(u)  # y - x^2 + 2 = -(x^2 - y - 2)
    if d.is_zero(u):
        raise ReduciblePoint("x^2 - y - 2 = 0: representation is reducible")
    roots = _quadratic_roots(d, pt.x)
    if not roots:
        raise NoSquareRoot(f"no s in the domain with s + 1/s = {d.format(pt.x)}")
    s = roots[0]
    sinv = d.inv(s) if d.is_field else _ring_inverse(d, s)
    rho_a = ((s, d.one), (d.zero, sinv))
    rho_b = ((s, d.zero), (u, sinv))
    return MatrixRep(domain=d, matrices=(rho_a, rho_b))


def _ring_inverse(d, s):
    """Inverse of a norm-+-1 element of a quadratic ring."""
    conj = d.conj(s)
    if d.mul(s, conj) == d.one:
        return conj
    if d.mul(s, conj) == d.neg(d.one):
        return d.neg(conj)
    raise NoSquareRoot(f"{d.format(s)} is not a unit")


def twist_knot_presentation(n: int) -> Presentation:
    """pi = <a, b | a w^n b^-1 w^-n> with w = a b^-1 a^-1 b, both meridians."""
    gens = ("a", "b")
    w = parse_word("aBAb", gens)
    rel = parse_word("a", gens) * (w ** n) * parse_word("B", gens) * (w ** (-n))
    return Presentation(generators=gens, relators=(rel,), abelianization=(1, 1))
