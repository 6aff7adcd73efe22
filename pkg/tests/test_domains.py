"""Coefficient domain arithmetic against small independent oracles."""

import random
from fractions import Fraction

import pytest

from iwaknot.domains import (
    QQ,
    ZZ,
    Integers,
    PrimeField,
    QuadraticField,
    QuadraticRing,
    Rationals,
    domain_from_description,
    is_prime,
    smallest_nonresidue,
)
from iwaknot.errors import InexactDivision


def test_is_prime_matches_trial_division():
    def trial(n):
        if n < 2:
            return False
        return all(n % d for d in range(2, int(n**0.5) + 1))

    for n in range(-3, 500):
        assert is_prime(n) == trial(n), n


def test_integers_basic():
    d = Integers()
    assert d.add(3, 4) == 7
    assert d.mul(-2, 5) == -10
    assert d.is_unit(-1) and not d.is_unit(2)
    assert d.exact_div(12, -4) == -3
    with pytest.raises(InexactDivision):
        d.exact_div(7, 2)


def test_rationals_field():
    d = Rationals()
    a = d.coerce(Fraction(3, 4))
    assert d.mul(a, d.inv(a)) == d.one
    assert d.exact_div(Fraction(1, 2), Fraction(3)) == Fraction(1, 6)


@pytest.mark.parametrize("p", [2, 3, 5, 13, 101])
def test_prime_field_matches_int_mod_p(p):
    d = PrimeField(p)
    rng = random.Random(p)
    for _ in range(200):
        a, b = rng.randrange(p), rng.randrange(p)
        assert d.add(a, b) == (a + b) % p
        assert d.mul(a, b) == (a * b) % p
        assert d.sub(a, b) == (a - b) % p
        if b:
            assert d.mul(b, d.inv(b)) == 1


def test_prime_field_sqrt():
    d = PrimeField(13)
    for a in range(13):
        sq = d.mul(a, a)
        r = d.sqrt(sq)
        assert d.mul(r, r) == sq


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_quadratic_field_is_a_field_of_order_p_squared(p):
    d = QuadraticField(p)
    elems = list(d.elements())
    assert len(elems) == p * p
    assert len(set(elems)) == p * p
    rng = random.Random(p)
    sample = rng.sample(elems, min(30, len(elems)))
    for a in sample:
        if d.is_zero(a):
            continue
        assert d.mul(a, d.inv(a)) == d.one
        # Fermat in F_{p^2}
        assert d.power(a, p * p - 1) == d.one


def test_quadratic_field_nonresidue_is_a_nonresidue():
    for p in (3, 5, 7, 11, 13, 17):
        r = smallest_nonresidue(p)
        assert all(pow(a, 2, p) != r % p for a in range(p))


def test_quadratic_ring_norm_multiplicative():
    d = QuadraticRing(2)
    rng = random.Random(7)
    for _ in range(100):
        a = (rng.randint(-9, 9), rng.randint(-9, 9))
        b = (rng.randint(-9, 9), rng.randint(-9, 9))
        assert d.norm(d.mul(a, b)) == d.norm(a) * d.norm(b)


def test_quadratic_ring_golden_unit():
    # (1 + sqrt5)/2 has norm -1 in the half-integer basis
    d = QuadraticRing(5, half_basis=True)
    phi = d.coerce((0, 1))
    assert d.norm(phi) == -1


def test_parse_format_roundtrip():
    cases = [
        (ZZ, -17),
        (QQ, Fraction(-3, 7)),
        (PrimeField(11), 8),
        (QuadraticField(5), (2, 3)),
        (QuadraticRing(2), (-1, 4)),
    ]
    for d, a in cases:
        a = d.coerce(a)
        assert d.parse(d.format(a)) == a


def test_domain_from_description_roundtrip():
    for d in (ZZ, QQ, PrimeField(7), QuadraticField(3), QuadraticRing(-1)):
        d2 = domain_from_description(d.describe())
        assert d2 == d
