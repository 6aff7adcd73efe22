"""JSON interchange for polynomials, presentations, and representations.

Polynomial JSON:
    {"domain": {...}, "terms": [[exp, "coeff-string"], ...]}
Coefficient strings are decimal (Fractions as "p/q", quadratic elements
as "a+b*w").  Big integers are always serialized as strings so no
precision is lost in transit.

Presentation JSON:
    {"generators": ["a", "b"], "relators": ["a b^-1 ..."],
     "abelianization": {"a": 1, "b": 1}}
MatrixRep JSON:
    {"domain": {...}, "matrices": [[["1", "0"], ["0", "1"]], ...]}
"""

from __future__ import annotations

import json

from .domains import CoefficientDomain, domain_from_description
from .foxcalc import MatrixRep, Presentation, format_word, parse_word
from .laurent import LaurentPoly, parse_poly


def poly_to_dict(f: LaurentPoly) -> dict:
    terms = [[e, f.domain.format(c)] for e, c in sorted(f.terms.items())]
    return {"domain": f.domain.describe(), "terms": terms}


def poly_from_dict(data: dict) -> LaurentPoly:
    domain = domain_from_description(data["domain"])
    pairs = [(int(e), domain.parse(s)) for e, s in data["terms"]]
    return LaurentPoly.from_terms(domain, pairs)


def poly_to_json(f: LaurentPoly) -> str:
    return json.dumps(poly_to_dict(f))


def poly_from_json(text: str) -> LaurentPoly:
    return poly_from_dict(json.loads(text))


def load_poly(source: str, domain: CoefficientDomain | None = None) -> LaurentPoly:
    """Accept either the JSON format or a plain text expression."""
    stripped = source.strip()
    if stripped.startswith("{"):
        return poly_from_dict(json.loads(stripped))
    return parse_poly(stripped, domain)


def presentation_to_dict(pres: Presentation) -> dict:
    return {
        "generators": list(pres.generators),
        "relators": [format_word(r, pres.generators) for r in pres.relators],
        "abelianization": {
            g: w for g, w in zip(pres.generators, pres.abelianization)
        },
    }


def presentation_from_dict(data: dict) -> Presentation:
    gens = tuple(data["generators"])
    relators = tuple(parse_word(s, gens) for s in data["relators"])
    ab = tuple(int(data["abelianization"][g]) for g in gens)
    return Presentation(generators=gens, relators=relators, abelianization=ab)


def rep_to_dict(rep: MatrixRep) -> dict:
    d = rep.domain
    return {
        "domain": d.describe(),
        "matrices": [
            [[d.format(c) for c in row] for row in mat] for mat in rep.matrices
        ],
    }


def rep_from_dict(data: dict) -> MatrixRep:
    d = domain_from_description(data["domain"])
    mats = tuple(
        tuple(tuple(d.parse(c) for c in row) for row in mat)
        for mat in data["matrices"]
    )
    return MatrixRep(domain=d, matrices=mats)
