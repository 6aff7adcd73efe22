"""Free group words, Fox derivatives, and the determinant ratio.

The Fox derivative satisfies the fundamental identity
sum_g (dr/dg)(Phi(g) - 1) = Phi(r) - 1, which is checked on nontrivial
relators; the determinant ratio is cross-checked against the classical
Alexander polynomial via the trivial 1-dimensional representation.
"""

from fractions import Fraction

import pytest

from iwaknot.domains import QQ, PrimeField
from iwaknot.errors import (
    DeficiencyMismatch,
    DenominatorVanishes,
    UnknownGenerator,
    WordSyntaxError,
)
from iwaknot.foxcalc import (
    GroupWord,
    MatrixRep,
    Presentation,
    fox_derivative,
    fox_identity_holds,
    format_word,
    parse_word,
    wada_invariant,
)
from iwaknot.laurent import LaurentPoly, doteq_equal, parse_poly
from iwaknot.twistknot import classical_alexander, twist_knot_presentation

GENS = ("a", "b")


def test_parse_word_compact_and_spaced():
    w1 = parse_word("aBAb", GENS)
    w2 = parse_word("a b^-1 a^-1 b", GENS)
    assert w1 == w2
    assert format_word(w1, GENS) == "a b^-1 a^-1 b"


def test_parse_word_errors():
    with pytest.raises(UnknownGenerator):
        parse_word("ax", GENS)
    with pytest.raises(WordSyntaxError):
        parse_word("a^", GENS)


def test_free_reduction():
    w = parse_word("aA", GENS)
    assert w.is_identity
    assert (parse_word("ab", GENS) * parse_word("Ba", GENS)) == parse_word("aa", GENS)
    assert parse_word("ab", GENS).inverse() == parse_word("BA", GENS)
    assert parse_word("ab", GENS) ** 2 == parse_word("abab", GENS)
    assert parse_word("ab", GENS) ** -1 == parse_word("BA", GENS)


def test_total_exponent():
    w = parse_word("aBAb", GENS)
    assert w.total_exponent((1, 1)) == 0
    assert parse_word("aab", GENS).total_exponent((1, 1)) == 3


def test_fox_derivative_hand_values():
    # d(ab)/da = 1, d(ab)/db = a, d(a^-1)/da = -a^-1
    ab = parse_word("ab", GENS)
    assert fox_derivative(ab, 0) == [(1, GroupWord(()))]
    assert fox_derivative(ab, 1) == [(1, parse_word("a", GENS))]
    ainv = parse_word("A", GENS)
    assert fox_derivative(ainv, 0) == [(-1, parse_word("A", GENS))]
    # d(a^2)/da = 1 + a
    assert fox_derivative(parse_word("aa", GENS), 0) == [
        (1, GroupWord(())),
        (1, parse_word("a", GENS)),
    ]


def trefoil_presentation():
    # <a, b | aba b^-1 a^-1 b^-1>, both generators meridians
    rel = parse_word("abaBAB", GENS)
    return Presentation(generators=GENS, relators=(rel,), abelianization=(1, 1))


def trivial_rep(domain=None):
    d = domain or QQ
    return MatrixRep(domain=d, matrices=(((d.one,),), ((d.one,),)))


def test_fox_identity_on_relators():
    for pres in (trefoil_presentation(), twist_knot_presentation(2),
                 twist_knot_presentation(-3)):
        rep = trivial_rep()
        for rel in pres.relators:
            assert fox_identity_holds(pres, rep, rel)


def test_wada_trefoil_trivial_rep_is_alexander():
    pres = trefoil_presentation()
    num, den = wada_invariant(pres, trivial_rep(), 1)
    assert doteq_equal(num, parse_poly("t^2-t+1", domain=QQ))
    assert doteq_equal(den, parse_poly("t-1", domain=QQ))


@pytest.mark.parametrize("n", [-3, -2, -1, 1, 2, 3])
def test_wada_twist_knot_trivial_rep_recovers_classical(n):
    """num/den of the abelianized ratio is Delta_1 / Delta_0 = Delta_1/(t-1)."""
    pres = twist_knot_presentation(n)
    num, den = wada_invariant(pres, trivial_rep(), 1)
    _, d1 = classical_alexander(n)
    assert doteq_equal(den, parse_poly("t-1", domain=QQ))
    lifted = LaurentPoly.from_terms(QQ, [(e, Fraction(int(d1.coeff(e))))
                                         for e in range(3)])
    assert doteq_equal(num, lifted)


def test_wada_denominator_generator_choice_is_doteq_invariant():
    pres = twist_knot_presentation(2)
    rep = trivial_rep()
    num0, den0 = wada_invariant(pres, rep, 0)
    num1, den1 = wada_invariant(pres, rep, 1)
    # num0/den0 = num1/den1 up to units: cross-multiply
    assert doteq_equal(num0 * den1, num1 * den0)


def test_wada_deficiency_mismatch():
    pres = trefoil_presentation()
    bad = Presentation(
        generators=GENS,
        relators=(pres.relators[0], parse_word("abAB", GENS)),
        abelianization=(1, 1),
    )
    with pytest.raises(DeficiencyMismatch):
        wada_invariant(bad, trivial_rep(), 1)


def test_wada_denominator_vanishes_mod_p():
    # a weight-0 generator carried by the identity matrix kills the
    # denominator determinant
    pres = Presentation(
        generators=GENS,
        relators=(parse_word("abAB", GENS),),
        abelianization=(1, 0),
    )
    d = PrimeField(5)
    rep = MatrixRep(domain=d, matrices=(((d.one,),), ((d.one,),)))
    with pytest.raises(DenominatorVanishes):
        wada_invariant(pres, rep, 1)
