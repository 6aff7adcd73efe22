"""Laurent polynomial arithmetic, resultants, and the cyclotomic product.

The resultant checks use an independent Sylvester determinant computed
with Fraction Gaussian elimination, so that the library's fraction-free
route is cross-validated against textbook linear algebra.
"""

import random
from fractions import Fraction

import pytest

from iwaknot.domains import QQ, ZZ, PrimeField, QuadraticRing
from iwaknot.errors import DomainMismatch, ZeroPolynomial
from iwaknot.laurent import (
    LaurentPoly,
    content,
    cyclic_resultant,
    cyclotomic_coeffs,
    cyclotomic_product,
    derivative,
    doteq_equal,
    format_poly,
    mul,
    norm_polynomial,
    parse_poly,
    primitive_part,
    resultant,
    substitute_power,
    substitute_shift,
    unit_normal,
)


def rand_poly(rng, span=5, bound=20, laurent=True):
    coeffs = [rng.randint(-bound, bound) for _ in range(span + 1)]
    coeffs[-1] = coeffs[-1] or 1
    min_exp = rng.randint(-3, 3) if laurent else 0
    return LaurentPoly.from_coeffs(ZZ, coeffs, min_exp)


def sylvester_det_oracle(fc, gc):
    """det of the Sylvester matrix of two coefficient lists, by Fraction
    Gaussian elimination (independent of the Bareiss code under test)."""
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in reversed(fc)]
                    + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in reversed(gc)]
                    + [Fraction(0)] * (size - i - n - 1))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return int(det)


def test_parse_and_format_roundtrip():
    for text in ["t^2-3*t+1", "2*t^2-3*t+2", "t^-2+5-t^3", "-t+4"]:
        f = parse_poly(text)
        assert parse_poly(format_poly(f)) == f


def test_arithmetic_matches_dict_convolution():
    rng = random.Random(11)
    for _ in range(50):
        f, g = rand_poly(rng), rand_poly(rng)
        prod = {}
        for ef, cf in f.terms.items():
            for eg, cg in g.terms.items():
                prod[ef + eg] = prod.get(ef + eg, 0) + cf * cg
        prod = {e: c for e, c in prod.items() if c}
        assert (f * g).terms == prod
        sm = {}
        for e in set(f.terms) | set(g.terms):
            c = f.coeff(e) + g.coeff(e)
            if c:
                sm[e] = c
        assert (f + g).terms == sm


def test_evaluate_horner_vs_direct():
    rng = random.Random(3)
    for _ in range(20):
        f = rand_poly(rng, laurent=False)
        x = rng.randint(-9, 9)
        direct = sum(c * x**e for e, c in f.terms.items())
        assert f.evaluate(x) == direct


def test_domain_mismatch_rejected():
    f = parse_poly("t+1")
    g = LaurentPoly.from_coeffs(PrimeField(5), [1, 1])
    with pytest.raises(DomainMismatch):
        f + g


def test_derivative_product_rule():
    rng = random.Random(5)
    for _ in range(20):
        f, g = rand_poly(rng), rand_poly(rng)
        lhs = derivative(f * g)
        rhs = derivative(f) * g + f * derivative(g)
        assert lhs == rhs


def test_substitute_shift_anchors():
    assert substitute_shift(parse_poly("t^2-3*t+1")) == parse_poly("T^2-T-1", var="T")
    assert substitute_shift(parse_poly("t^2+4*t+1")) == parse_poly("T^2+6*T+6", var="T")
    assert substitute_shift(parse_poly("t^2-4*t+1")) == parse_poly("T^2-2*T-2", var="T")
    assert substitute_shift(parse_poly("2*t^2-3*t+2")) == parse_poly("2*T^2+T+1", var="T")


def test_substitute_shift_is_evaluation_at_one_plus_T():
    rng = random.Random(23)
    for _ in range(20):
        f = rand_poly(rng, laurent=False)
        g = substitute_shift(f)
        for tv in (0, 1, -2, 5):
            assert g.evaluate(tv) == f.evaluate(1 + tv)


def test_substitute_power():
    f = parse_poly("t^2-3*t+1")
    assert substitute_power(f, 3) == parse_poly("t^6-3*t^3+1")


def test_content_primitive():
    f = parse_poly("6*t^2-9*t+3")
    assert content(f) == 3
    assert primitive_part(f) == parse_poly("2*t^2-3*t+1")


def test_unit_normal_and_doteq():
    f = parse_poly("t^2-3*t+1")
    assert unit_normal(f.shifted(5)) == unit_normal(f)
    assert doteq_equal(f.shifted(-2).scale(-1), f)
    assert not doteq_equal(f, parse_poly("t^2-3*t+2"))


def test_resultant_against_fraction_gauss_oracle():
    rng = random.Random(42)
    for _ in range(30):
        f = rand_poly(rng, span=rng.randint(1, 4), laurent=False)
        g = rand_poly(rng, span=rng.randint(1, 4), laurent=False)
        fc = [int(c) for c in f.coeff_list()]
        gc = [int(c) for c in g.coeff_list()]
        assert resultant(f, g) == sylvester_det_oracle(fc, gc)


def test_resultant_multiplicative():
    rng = random.Random(8)
    for _ in range(15):
        f = rand_poly(rng, span=2, laurent=False)
        g = rand_poly(rng, span=2, laurent=False)
        h = rand_poly(rng, span=3, laurent=False)
        assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)


def test_cyclic_resultant_values():
    fig8 = parse_poly("t^2-3*t+1")
    value, psi = cyclic_resultant(fig8, 10)
    assert value == -15125
    assert psi == LaurentPoly.one(ZZ)
    # brute force against prod_{zeta^n=1} f(zeta) = Res(t^n - 1, f)
    rng = random.Random(77)
    for _ in range(15):
        f = rand_poly(rng, span=rng.randint(1, 4), laurent=False)
        n = rng.randint(1, 6)
        tn = [-1] + [0] * (n - 1) + [1]
        expected = sylvester_det_oracle(tn, [int(c) for c in f.coeff_list()])
        value, psi = cyclic_resultant(f, n)
        if psi == LaurentPoly.one(ZZ):
            assert value == expected
        else:
            assert expected == 0


def test_cyclic_resultant_psi_quotient():
    value, psi = cyclic_resultant(parse_poly("t-1"), 3)
    assert (value, psi) == (3, parse_poly("t-1"))
    value, psi = cyclic_resultant(parse_poly("t^2-1"), 4)
    assert (value, psi) == (4, parse_poly("t^2-1"))


def test_cyclic_resultant_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        cyclic_resultant(LaurentPoly.zero(ZZ), 3)


def test_cyclotomic_coeffs():
    assert list(cyclotomic_coeffs(1)) == [-1, 1]
    assert list(cyclotomic_coeffs(2)) == [1, 1]
    assert list(cyclotomic_coeffs(4)) == [1, 0, 1]
    assert list(cyclotomic_coeffs(6)) == [1, -1, 1]
    assert list(cyclotomic_coeffs(12)) == [1, 0, -1, 0, 1]


def test_cyclotomic_product_anchors():
    fig8 = parse_poly("t^2-3*t+1")
    assert cyclotomic_product(fig8, 2) == parse_poly("t^2-7*t+1")
    assert cyclotomic_product(fig8, 4) == parse_poly("t^2-47*t+1")


def test_cyclotomic_product_m2_matches_f_t_f_minus_t():
    """g(t^2) = f(t) f(-t) up to the (-1)^deg leading normalization."""
    rng = random.Random(13)
    for _ in range(25):
        f = rand_poly(rng, span=rng.randint(1, 5), laurent=False)
        g = cyclotomic_product(f, 2)
        assert g.span == f.span
        fm = LaurentPoly.from_terms(ZZ, [(e, c if e % 2 == 0 else -c)
                                         for e, c in f.terms.items()])
        target = mul(f, fm)
        lifted = substitute_power(g, 2)
        sign = 1 if f.span % 2 == 0 else -1
        assert lifted == target.scale(sign) or lifted == target


def test_cyclotomic_product_respects_resultant_factorization():
    """Res(t^(mn) - 1, f) = Res(t^n - 1, g) with g the m-fold product."""
    rng = random.Random(19)
    for _ in range(15):
        f = rand_poly(rng, span=rng.randint(1, 4), laurent=False)
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        if __import__("math").gcd(m, n) != 1:
            continue
        g = substitute_power(cyclotomic_product(f, m), m)
        lhs, psi1 = cyclic_resultant(f, m * n)
        rhs, psi2 = cyclic_resultant(g, n)
        if psi1 == LaurentPoly.one(ZZ) and psi2 == LaurentPoly.one(ZZ):
            assert abs(lhs) == abs(rhs)


def test_norm_polynomial():
    # (t - (1+w))(t - (1-w)) = t^2 - 2t - 1 for w = sqrt(2)
    d = QuadraticRing(2)
    f = LaurentPoly.from_terms(d, [(1, (1, 0)), (0, d.neg(d.coerce((1, 1))))])
    nf = norm_polynomial(f)
    assert nf == parse_poly("t^2-2*t-1")
