"""Exact arithmetic for twisted knot polynomial invariants.

Subpackages by layer: coefficient domains, Laurent polynomials and
resultants, p-adic measures, Iwasawa invariants, Fox calculus,
twist-knot closed forms, detection diagnostics, and the CLI/suite
plumbing on top.
"""

from .domains import (
    ZZ,
    QQ,
    Integers,
    PrimeField,
    QuadraticField,
    QuadraticRing,
    Rationals,
)
from .laurent import (
    LaurentPoly,
    cyclic_resultant,
    cyclotomic_product,
    doteq_equal,
    format_poly,
    norm_polynomial,
    parse_poly,
    resultant,
    substitute_power,
    substitute_shift,
    unit_normal,
)
from .padic import gauss_norm_exponent, mahler_measure, valuation
from .iwasawa import (
    IwasawaTriple,
    iwasawa_lambda_mu,
    lambda_sup,
    nu_estimate,
    reidemeister_iwasawa,
    verify_formula,
    weierstrass_extract,
)
from .foxcalc import GroupWord, MatrixRep, Presentation, parse_word, wada_invariant
from .twistknot import (
    TraceCoordinates,
    TwistKnot,
    chebyshev,
    classical_alexander,
    classify_point,
    mu_zero_scan,
    nonacyclic_points,
    reducible_torsion,
    residually_reducible_report,
    riley_fn,
    riley_gradient,
    singular_numerators,
    torsion_poly,
    tran_coefficients,
    twist_knot_presentation,
)
from .detect import degree_recovery, fibered_mu_criterion, genus_bound, monic_detect

__version__ = "0.1.0"
