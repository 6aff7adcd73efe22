"""JSON round-trips for polynomials, presentations, and representations."""

import json
from fractions import Fraction

from iwaknot.domains import QQ, ZZ, PrimeField, QuadraticField
from iwaknot.foxcalc import MatrixRep, parse_word
from iwaknot.laurent import LaurentPoly, parse_poly
from iwaknot.serialize import (
    load_poly,
    poly_from_json,
    poly_to_dict,
    poly_to_json,
    presentation_from_dict,
    presentation_to_dict,
    rep_from_dict,
    rep_to_dict,
)
from iwaknot.twistknot import twist_knot_presentation


def test_poly_roundtrip_zz():
    f = parse_poly("3*t^2-5*t+7")
    assert poly_from_json(poly_to_json(f)) == f


def test_poly_roundtrip_laurent_negative_exponents():
    f = LaurentPoly.from_terms(ZZ, [(-2, 3), (0, -1), (5, 11)])
    assert poly_from_json(poly_to_json(f)) == f


def test_poly_roundtrip_qq():
    f = LaurentPoly.from_terms(QQ, [(0, Fraction(2, 3)), (1, Fraction(-7, 5))])
    assert poly_from_json(poly_to_json(f)) == f


def test_poly_roundtrip_prime_field():
    d = PrimeField(13)
    f = LaurentPoly.from_terms(d, [(0, d.coerce(5)), (3, d.coerce(12))])
    back = poly_from_json(poly_to_json(f))
    assert back == f
    assert back.domain.p == 13


def test_poly_roundtrip_quadratic_field():
    d = QuadraticField(7)
    f = LaurentPoly.from_terms(
        d, [(0, d.coerce((2, 3))), (2, d.coerce((0, 6)))]
    )
    assert poly_from_json(poly_to_json(f)) == f


def test_poly_big_integers_as_strings():
    big = 10**40 + 7
    f = LaurentPoly.from_terms(ZZ, [(0, big)])
    data = poly_to_dict(f)
    assert data["terms"][0][1] == str(big)
    assert int(poly_from_json(poly_to_json(f)).coeff(0)) == big


def test_load_poly_json_and_text_agree():
    f = parse_poly("t^2-3*t+1")
    assert load_poly(poly_to_json(f)) == f
    assert load_poly("  t^2-3*t+1 ") == f


def test_poly_json_is_valid_json():
    parsed = json.loads(poly_to_json(parse_poly("t-1")))
    assert set(parsed) == {"domain", "terms"}


def test_presentation_roundtrip():
    pres = twist_knot_presentation(3)
    back = presentation_from_dict(presentation_to_dict(pres))
    assert back == pres


def test_presentation_dict_shape():
    pres = twist_knot_presentation(2)
    data = presentation_to_dict(pres)
    assert data["generators"] == ["a", "b"]
    assert data["abelianization"] == {"a": 1, "b": 1}
    gens = tuple(data["generators"])
    assert parse_word(data["relators"][0], gens) == pres.relators[0]


def test_rep_roundtrip_prime_field():
    d = PrimeField(11)
    rep = MatrixRep(
        domain=d,
        matrices=(
            ((d.coerce(2), d.one), (d.zero, d.coerce(6))),
            ((d.coerce(2), d.zero), (d.one, d.coerce(6))),
        ),
    )
    back = rep_from_dict(rep_to_dict(rep))
    assert back == rep
    assert back.domain.p == 11


def test_rep_roundtrip_quadratic_field():
    d = QuadraticField(5)
    w = d.coerce((0, 1))
    rep = MatrixRep(
        domain=d,
        matrices=((((w, d.one), (d.zero, w))), ((d.one, w), (d.zero, d.one))),
    )
    assert rep_from_dict(rep_to_dict(rep)) == rep
