"""Exact Laurent-polynomial arithmetic over the coefficient domains.

A Laurent polynomial is a finite map exponent -> nonzero coefficient.
The zero polynomial is the empty map.  ``span(f) = max_exp - min_exp``
is the degree of a Laurent polynomial in the usual sense.

Alongside the ring operations the module provides the number-theoretic
kernels used elsewhere: resultants (fraction-free Bareiss on the
Sylvester matrix), cyclic resultants Res(t^n - 1, f) with the gcd
quotient convention, the cyclotomic product g with g(t^m) equal to the
product of f(zeta*t) over m-th roots of unity, the binomial shift
t -> 1 + T, and the norm map down from quadratic coefficient rings.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .domains import ZZ, QQ, CoefficientDomain, Integers, QuadraticRing, Rationals
from .errors import (
    DomainMismatch,
    InexactDivision,
    NonIntegralResult,
    NonInvertibleEvaluationPoint,
    WrongDomain,
    ZeroPolynomial,
)


class LaurentPoly:
    """Immutable Laurent polynomial over a coefficient domain."""

    __slots__ = ("domain", "terms")

    def __init__(self, domain: CoefficientDomain, terms: dict):
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, *_):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_terms(cls, domain, pairs):
        """Build from (exponent, raw coefficient) pairs; cancels and drops zeros."""
        acc: dict = {}
        for exp, raw in pairs:
            c = domain.coerce(raw)
            if exp in acc:
                c = domain.add(acc[exp], c)
            acc[exp] = c
        return cls(domain, {e: c for e, c in acc.items() if not domain.is_zero(c)})

    @classmethod
    def from_coeffs(cls, domain, coeffs, min_exp: int = 0):
        """Build from a dense coefficient list, lowest exponent first."""
        return cls.from_terms(domain, [(min_exp + i, c) for i, c in enumerate(coeffs)])

    @classmethod
    def zero(cls, domain):
        return cls(domain, {})

    @classmethod
    def one(cls, domain):
        return cls(domain, {0: domain.one})

    @classmethod
    def monomial(cls, domain, exp: int, coeff=1):
        c = domain.coerce(coeff)
        return cls(domain, {} if domain.is_zero(c) else {exp: c})

    # -- structure -------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exp(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return min(self.terms)

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return max(self.terms)

    @property
    def span(self) -> int:
        """Degree of the Laurent polynomial: max_exp - min_exp."""
        return self.max_exp - self.min_exp

    def coeff(self, exp: int):
        return self.terms.get(exp, self.domain.zero)

    def coeff_list(self):
        """Dense coefficients from min_exp to max_exp (raises on zero)."""
        lo = self.min_exp
        return [self.coeff(e) for e in range(lo, self.max_exp + 1)]

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly(self.domain, {e + k: c for e, c in self.terms.items()})

    def to_ordinary(self) -> "LaurentPoly":
        """Shift so min_exp = 0 (a unit multiple, invariant under doteq)."""
        if self.is_zero:
            return self
        return self.shifted(-self.min_exp)

    # -- ring operations -------------------------------------------------
    def _check(self, other):
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain!r} vs {other.domain!r}")

    def __add__(self, other):
        self._check(other)
        d = self.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = d.add(out.get(e, d.zero), c)
            if d.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(d, out)

    def __neg__(self):
        d = self.domain
        return LaurentPoly(d, {e: d.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        d = self.domain
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = d.mul(c1, c2)
                if e in out:
                    p = d.add(out[e], p)
                out[e] = p
        return LaurentPoly(d, {e: c for e, c in out.items() if not d.is_zero(c)})

    def scale(self, raw) -> "LaurentPoly":
        d = self.domain
        c0 = d.coerce(raw)
        if d.is_zero(c0):
            return LaurentPoly.zero(d)
        return LaurentPoly(d, {e: d.mul(c, c0) for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not supported")
        result = LaurentPoly.one(self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.domain, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    # -- evaluation ------------------------------------------------------
    def evaluate(self, x):
        """Exact value f(x); x must be invertible if f has negative exponents."""
        d = self.domain
        x = d.coerce(x)
        if self.is_zero:
            return d.zero
        lo, hi = self.min_exp, self.max_exp
        if lo < 0 and not d.is_unit(x) and not (d.is_field and not d.is_zero(x)):
            raise NonInvertibleEvaluationPoint(f"{d.format(x)} is not invertible")
        # Horner on the ordinary part, then divide by x^{-lo} if needed
        acc = d.zero
        for e in range(hi, lo - 1, -1):
            acc = d.add(d.mul(acc, x), self.coeff(e))
        if lo < 0:
            acc = d.mul(acc, d.power(d.inv(x), -lo))
        elif lo > 0:
            acc = d.mul(acc, d.power(x, lo))
        return acc


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def normalize(domain: CoefficientDomain, pairs) -> LaurentPoly:
    """Normalize a raw (exponent, coefficient) term list."""
    return LaurentPoly.from_terms(domain, pairs)


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def evaluate(f: LaurentPoly, x):
    return f.evaluate(x)


def substitute_shift(f: LaurentPoly) -> LaurentPoly:
    """Expand f(1+T) exactly (after clearing negative exponents by a unit).

    The result is a polynomial in T over the same domain, implementing the
    isomorphism t -> 1 + T used for lambda/mu extraction.
    """
    if f.is_zero:
        return f
    d = f.domain
    g = f.to_ordinary()
    one_plus_t = LaurentPoly.from_coeffs(d, [d.one, d.one])
    acc = LaurentPoly.zero(d)
    for e in range(g.max_exp, -1, -1):
        acc = acc * one_plus_t + LaurentPoly.monomial(d, 0, g.coeff(e))
    return acc


def substitute_power(f: LaurentPoly, v: int) -> LaurentPoly:
    """f(t^v) for v >= 1."""
    if v < 1:
        raise ValueError("v must be >= 1")
    return LaurentPoly(f.domain, {e * v: c for e, c in f.terms.items()})


def derivative(f: LaurentPoly) -> LaurentPoly:
    """Formal derivative d/dt; integer exponent multiples stay in-domain."""
    d = f.domain
    out = {}
    for e, c in f.terms.items():
        if e == 0:
            continue
        scaled = d.mul(c, d.coerce(e))
        if not d.is_zero(scaled):
            out[e - 1] = scaled
    return LaurentPoly(d, out)


def content(f: LaurentPoly) -> int:
    """gcd of the coefficients of an integer polynomial (0 for the zero poly)."""
    if not isinstance(f.domain, Integers):
        raise WrongDomain("content is defined over Z")
    g = 0
    for c in f.terms.values():
        g = _gcd(g, abs(c))
    return g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def primitive_part(f: LaurentPoly) -> LaurentPoly:
    c = content(f)
    if c in (0, 1):
        return f
    return LaurentPoly(f.domain, {e: v // c for e, v in f.terms.items()})


# ---------------------------------------------------------------------------
# unit-normal forms and doteq
# ---------------------------------------------------------------------------

class UnitNormalForm:
    """Canonical representative of a doteq-class (equality up to unit * t^k)."""

    __slots__ = ("poly",)

    def __init__(self, poly: LaurentPoly):
        self.poly = poly

    def __eq__(self, other):
        return isinstance(other, UnitNormalForm) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"UnitNormalForm({format_poly(self.poly)!r})"


def unit_normal(f: LaurentPoly) -> UnitNormalForm:
    """Shift min_exp to 0 and fix the unit ambiguity.

    Over a field the lowest coefficient is scaled to 1; over Z the lowest
    nonzero coefficient is made positive; over a quadratic ring the
    polynomial is normalized by +-1 only (other units are not enumerated,
    which is safe for the imaginary rings used here).
    """
    if f.is_zero:
        return UnitNormalForm(f)
    d = f.domain
    g = f.to_ordinary()
    low = g.coeff(0)
    if d.is_field:
        g = g.scale(d.inv(low))
    elif isinstance(d, Integers):
        if low < 0:
            g = -g
    elif isinstance(d, QuadraticRing):
        a, b = low
        if a < 0 or (a == 0 and b < 0):
            g = -g
    return UnitNormalForm(g)


def doteq_equal(f: LaurentPoly, g: LaurentPoly) -> bool:
    """f = g up to multiplication by a unit and a power of t."""
    return unit_normal(f) == unit_normal(g)


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def resultant(f: LaurentPoly, g: LaurentPoly):
    """Res(f, g) as a Sylvester determinant via fraction-free elimination.

    Laurent inputs are first shifted to min_exp = 0, so the value is the
    resultant of the ordinary parts (well defined up to the doteq
    ambiguity the callers work under).
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    d = f.domain
    if d != g.domain:
        raise DomainMismatch("resultant operands in different domains")
    fc = f.to_ordinary().coeff_list()
    gc = g.to_ordinary().coeff_list()
    m, n = len(fc) - 1, len(gc) - 1
    if m == 0 and n == 0:
        return d.one
    size = m + n
    rows = []
    for i in range(n):
        row = [d.zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [d.zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(d, rows)


def _bareiss_det(d: CoefficientDomain, a):
    """Fraction-free Bareiss determinant; divisions are exact by construction."""
    n = len(a)
    if n == 0:
        return d.one
    sign = 1
    prev = d.one
    for k in range(n - 1):
        if d.is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not d.is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return d.zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = d.sub(d.mul(a[i][j], pivot), d.mul(a[i][k], a[k][j]))
                a[i][j] = d.exact_div(num, prev)
            a[i][k] = d.zero
        prev = pivot
    det = a[n - 1][n - 1]
    return d.neg(det) if sign < 0 else det


# ---------------------------------------------------------------------------
# dense rational polynomial helpers (internal)
# ---------------------------------------------------------------------------

def _q_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _q_mod(a, b):
    """Remainder of dense Fraction lists a mod b (b monic not required)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a.pop()
        _q_trim(a)
    return a


def _q_divmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] / lb
        shift = len(a) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        _q_trim(a)
    return q, a


def _q_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _q_mod(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _q_mulmod(a, b, mod):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _q_mod(_q_trim(out), mod)


def _q_powmod_t(n, mod):
    """t^n mod (dense Fraction list mod)."""
    result = [Fraction(1)]
    base = _q_mod([Fraction(0), Fraction(1)], mod)
    while n:
        if n & 1:
            result = _q_mulmod(result, base, mod)
        base = _q_mulmod(base, base, mod)
        n >>= 1
    return result


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial (low first)."""
    # Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, by exact division over Z.
    coeffs = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            phi = cyclotomic_coeffs(d)
            coeffs = _z_exact_div(coeffs, list(phi))
    return tuple(coeffs)


def _z_exact_div(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        q, r = divmod(a[-1], lb)
        if r:
            raise InexactDivision("non-exact cyclotomic division")
        shift = len(a) - 1 - db
        out[shift] = q
        for i, bc in enumerate(b):
            a[shift + i] -= q * bc
        a.pop()
    if any(a):
        raise InexactDivision("non-exact cyclotomic division")
    return out


# ---------------------------------------------------------------------------
# cyclic resultants
# ---------------------------------------------------------------------------

def _as_integer_coeffs(f: LaurentPoly):
    """Ordinary integer coefficient list and a denominator q with q*f in Z[t]."""
    d = f.domain
    coeffs = f.to_ordinary().coeff_list()
    if isinstance(d, Integers):
        return [int(c) for c in coeffs], 1
    if isinstance(d, Rationals):
        q = 1
        for c in coeffs:
            q = q * c.denominator // _gcd(q, c.denominator)
        return [int(c * q) for c in coeffs], q
    raise WrongDomain("cyclic resultants are implemented over Z and Q")


def _companion_scaled(coeffs):
    """lc * companion(f/lc) as an integer matrix, for integer coeffs of f."""
    deg = len(coeffs) - 1
    lc = coeffs[-1]
    m = [[0] * deg for _ in range(deg)]
    for i in range(1, deg):
        m[i][i - 1] = lc
    for i in range(deg):
        m[i][deg - 1] = -coeffs[i]
    return m, lc


def _int_matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _int_matpow(m, n):
    size = len(m)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    base = m
    while n:
        if n & 1:
            result = _int_matmul(result, base)
        base = _int_matmul(base, base)
        n >>= 1
    return result


def _int_det(m):
    rows = [[Fraction(c) for c in row] for row in m]
    n = len(rows)
    det = Fraction(1)
    for k in range(n):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    det = -det
                    break
            else:
                return 0
        det *= rows[k][k]
        inv = 1 / rows[k][k]
        for i in range(k + 1, n):
            if rows[i][k]:
                factor = rows[i][k] * inv
                for j in range(k, n):
                    rows[i][j] -= factor * rows[k][j]
    assert det.denominator == 1
    return int(det)


def _psi_gcd(coeffs, n):
    """gcd(t^n - 1, f) as a primitive integer polynomial (dense, low first)."""
    fq = [Fraction(c) for c in coeffs]
    s = _q_powmod_t(n, fq)
    # t^n - 1 mod f
    s = list(s) if s else [Fraction(0)]
    s[0] -= 1
    g = _q_gcd(fq, _q_trim(s))
    if not g:  # f divides t^n - 1
        g = fq
        lead = g[-1]
        g = [c / lead for c in g]
    den = 1
    for c in g:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in g]
    cont = 0
    for c in ints:
        cont = _gcd(cont, abs(c))
    if cont > 1:
        ints = [c // cont for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _phi_contribution(coeffs, dprime):
    """Res(Phi_dprime, f) for integer coeffs of f, exact."""
    phi = cyclotomic_coeffs(dprime)
    m, lc = _companion_scaled(coeffs)
    deg = len(coeffs) - 1
    e = len(phi) - 1
    size = len(m)
    # N = sum_j phi_j * lc^{e-j} * M^j   (Horner, all integer)
    acc = [[phi[e] * int(i == j) for j in range(size)] for i in range(size)]
    scale = 1
    for j in range(e - 1, -1, -1):
        scale *= lc
        acc = _int_matmul(acc, m)
        for i in range(size):
            acc[i][i] += phi[j] * scale
    det = _int_det(acc)  # = lc^{e*deg} * det(Phi(C))
    num = det * (lc ** e)
    den = lc ** (e * deg)
    q, r = divmod(num, den) if den > 0 else divmod(-num, -den)
    assert r == 0
    # Res(Phi, f) = (-1)^{e*deg} Res(f, Phi) and Res(f, Phi) = lc^e prod Phi(alpha)
    return q * ((-1) ** (e * deg))


def cyclic_resultant(f: LaurentPoly, n: int):
    """(Res((t^n - 1)/psi, f), psi) with psi = gcd(t^n - 1, f), psi primitive.

    The value is computed exactly with big integers.  The generic path
    (psi = 1) evaluates det(C^n - I) through the scaled companion matrix;
    when f shares roots with t^n - 1 the quotient convention removes the
    offending cyclotomic factors one by one.
    """
    if f.is_zero:
        raise ZeroPolynomial("cyclic resultant of zero")
    if n < 1:
        raise ValueError("n must be >= 1")
    d = f.domain
    coeffs, q = _as_integer_coeffs(f)
    deg = len(coeffs) - 1
    if deg == 0:
        value = coeffs[0] ** n
        psi = LaurentPoly.one(ZZ)
        return _cyc_value_out(d, value, q, n), psi
    m, lc = _companion_scaled(coeffs)
    a = _int_matpow(m, n)
    lcn = lc ** n
    for i in range(deg):
        a[i][i] -= lcn
    det = _int_det(a)  # = lc^{n*deg} * det(C^n - I)
    if det != 0:
        num = det * ((-1) ** (n * deg))
        den = lc ** (n * (deg - 1))
        value, r = divmod(num, den) if den > 0 else divmod(-num, -den)
        assert r == 0
        return _cyc_value_out(d, value, q, n), LaurentPoly.one(ZZ)
    # shared roots of unity: strip psi and take the product over the
    # remaining cyclotomic divisors of t^n - 1
    psi_coeffs = _psi_gcd(coeffs, n)
    psi = LaurentPoly.from_coeffs(ZZ, psi_coeffs)
    value = 1
    for dprime in sorted(_divisors(n)):
        if _divides_poly(cyclotomic_coeffs(dprime), psi_coeffs):
            continue
        value *= _phi_contribution(coeffs, dprime)
    return _cyc_value_out(d, value, q, n), psi


def _cyc_value_out(domain, value, q, n):
    if isinstance(domain, Rationals):
        return Fraction(value, q ** n)
    return value


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _divides_poly(a, b):
    """Does integer poly a divide b (dense, low first)?"""
    if len(a) > len(b):
        return False
    try:
        _z_exact_div(list(b), list(a))
        return True
    except InexactDivision:
        return False


# ---------------------------------------------------------------------------
# cyclotomic product
# ---------------------------------------------------------------------------

def _char_poly_int(q):
    """Monic characteristic polynomial det(xI - Q) of an integer matrix.

    Faddeev-LeVerrier: all intermediate divisions by k are exact.
    Returns dense integer coefficients, low degree first.
    """
    d = len(q)
    cs = [0] * d  # c_1 .. c_d with charpoly = x^d + c_1 x^{d-1} + ... + c_d
    n_prev = [[int(i == j) for j in range(d)] for i in range(d)]
    for k in range(1, d + 1):
        mk = _int_matmul(q, n_prev)
        tr = sum(mk[i][i] for i in range(d))
        assert tr % k == 0
        ck = -tr // k
        cs[k - 1] = ck
        for i in range(d):
            mk[i][i] += ck
        n_prev = mk
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    for k in range(1, d + 1):
        coeffs[d - k] = cs[k - 1]
    return coeffs


def cyclotomic_product(f: LaurentPoly, m: int) -> LaurentPoly:
    """g over Z with g(t^m) = prod_{zeta^m = 1} f(zeta * t), up to the
    Laurent shift cleared from f.  deg g = deg f.

    The product equals +- lc^m prod_alpha (s - alpha^m) with alpha
    running over the roots of f, so g is read off the characteristic
    polynomial of the m-th power of the (scaled) companion matrix; the
    sign is fixed so the leading coefficient of g equals lc(f)^m.
    """
    if f.is_zero:
        raise ZeroPolynomial("cyclotomic product of zero")
    if m < 1:
        raise ValueError("m must be >= 1")
    if not isinstance(f.domain, Integers):
        raise WrongDomain("cyclotomic products are implemented over Z")
    g = f.to_ordinary()
    if m == 1:
        return g
    coeffs = [int(c) for c in g.coeff_list()]
    deg = len(coeffs) - 1
    lc = coeffs[-1]
    if deg == 0:
        return LaurentPoly.from_coeffs(ZZ, [lc ** m])
    mat, lc = _companion_scaled(coeffs)
    q = _int_matpow(mat, m)
    h = _char_poly_int(q)  # det(xI - (lc*C)^m)
    # g_j = +- h_j * lc^{m(j+1-deg)}; the negative powers divide exactly
    out = []
    for j, hj in enumerate(h):
        power = m * (deg - 1 - j)
        if power <= 0:
            out.append(hj * lc ** (-power))
        else:
            val, r = divmod(hj, lc ** power)
            assert r == 0
            out.append(val)
    result = LaurentPoly.from_coeffs(ZZ, out)
    if result.coeff(result.max_exp) * (lc ** m) < 0:
        result = -result
    return result


# ---------------------------------------------------------------------------
# norm map
# ---------------------------------------------------------------------------

def norm_polynomial(f: LaurentPoly) -> LaurentPoly:
    """f * f^sigma over a quadratic ring, returned over Z."""
    d = f.domain
    if not isinstance(d, QuadraticRing):
        raise WrongDomain("norm_polynomial expects a quadratic ring domain")
    conj = LaurentPoly(d, {e: d.conj(c) for e, c in f.terms.items()})
    prod = f * conj
    out = {}
    for e, (a, b) in prod.terms.items():
        if b != 0:
            raise NonIntegralResult(f"coefficient {d.format((a, b))} is not rational")
        out[e] = a
    return LaurentPoly(ZZ, out)


# ---------------------------------------------------------------------------
# parsing / formatting
# ---------------------------------------------------------------------------

def parse_poly(text: str, domain: CoefficientDomain | None = None, var: str = "t") -> LaurentPoly:
    """Parse expressions like '2*t^2-3*t+2' or 't^-1+1'."""
    d = domain or ZZ
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial expression")
    # split into signed terms at top level (no parentheses supported)
    terms = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-" and s[i - 1] not in "+-*^eE(":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    pairs = []
    for term in terms:
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise ValueError(f"dangling sign in {text!r}")
        if var in term:
            coeff_str, _, exp_part = term.partition(var)
            coeff_str = coeff_str.rstrip("*")
            exp = int(exp_part[1:]) if exp_part.startswith("^") else 1
            coeff = d.parse(coeff_str) if coeff_str else d.one
        else:
            coeff = d.parse(term)
            exp = 0
        if sign < 0:
            coeff = d.neg(coeff)
        pairs.append((exp, coeff))
    return LaurentPoly.from_terms(d, pairs)


def format_poly(f: LaurentPoly, var: str = "t") -> str:
    if f.is_zero:
        return "0"
    d = f.domain
    parts = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        cs = d.format(c)
        if "+" in cs[1:] or "-" in cs[1:]:
            cs = f"({cs})"
        if e == 0:
            parts.append(cs)
        else:
            head = "" if cs == "1" else ("-" if cs == "-1" else f"{cs}*")
            parts.append(f"{head}{var}" + (f"^{e}" if e != 1 else ""))
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out
