"""Detection diagnostics built from scanned lambda/mu invariants."""

import pytest

from iwaknot.detect import (
    degree_recovery,
    fibered_mu_criterion,
    genus_bound,
    monic_detect,
)
from iwaknot.domains import ZZ
from iwaknot.errors import EmptyReports, ZeroPolynomial
from iwaknot.laurent import LaurentPoly, parse_poly

FIG8 = parse_poly("t^2-3*t+1")


def test_degree_recovery_fig8():
    v = degree_recovery(FIG8, 5)
    assert v.status == "recovered"
    assert v.data["degree"] == 2
    assert v.witnesses["p"] == 5
    # lambda hits deg f already at some m <= 12
    assert 1 <= v.witnesses["m"] <= 12


def test_degree_recovery_all_small_primes():
    for p in (2, 3, 5, 7, 11):
        assert degree_recovery(FIG8, p).status == "recovered"


def test_degree_recovery_partial_when_p_divides_lead():
    # 5t^2 - t - 1: mod 5 the reduction is linear, lambda never reaches 2
    v = degree_recovery(parse_poly("5*t^2-t-1"), 5)
    assert v.status == "partial"
    assert v.data["degree_upper_bound"] == 2
    assert v.data["max_lambda"] < 2
    assert v.data["leading_coefficient_p_unit"] is False


def test_degree_recovery_partial_high_order_roots():
    # t^4+t^3+1 is primitive mod 2: root order 15 > 12, out of scan range
    v = degree_recovery(parse_poly("t^4+t^3+1"), 2)
    assert v.status == "partial"
    assert v.data["leading_coefficient_p_unit"] is True


def test_degree_recovery_zero_rejected():
    with pytest.raises(ZeroPolynomial):
        degree_recovery(LaurentPoly.zero(ZZ), 5)


def test_monic_detect_fig8():
    v = monic_detect(FIG8, p_list=(2, 3, 5, 7, 11))
    assert v.status == "monic"
    assert v.data["mus_all_zero"] is True
    assert v.data["lambda_values"] == [2]


def test_monic_detect_finite_scan_edge_case():
    # at p = 13 the reductions of t^2-3t+1 generate F_169 and their
    # multiplicative order exceeds m_max, so the finite scan reports a
    # lambda gap; this is the documented limitation, not a monicness fact
    v = monic_detect(FIG8)
    assert v.status == "non-monic"
    assert v.data["mus_all_zero"] is True
    assert v.witnesses["evidence"][13]["max_lambda"] == 0


def test_monic_detect_nonmonic_52_knot():
    # content is 1, so every mu vanishes; the lambda-max gap at p = 2
    # (reduction is a monomial) carries the whole verdict
    v = monic_detect(parse_poly("2*t^2-3*t+2"), p_list=(2, 3, 5, 7))
    assert v.status == "non-monic"
    assert v.data["mus_all_zero"] is True
    assert v.witnesses["evidence"][2]["max_lambda"] == 0
    assert v.witnesses["evidence"][3]["max_lambda"] == 2


def test_monic_detect_mu_refutation():
    v = monic_detect(parse_poly("112*t^2+208*t+112"), p_list=(2, 3, 5))
    assert v.status == "non-monic"
    assert v.witnesses["evidence"][2]["mu"] == 4


def test_monic_detect_rejects_composite_p():
    with pytest.raises(ValueError):
        monic_detect(FIG8, p_list=(2, 4))


def test_genus_bound_determined():
    v = genus_bound(1, 1, 1)
    assert v.status == "determined"
    assert v.data == {"x_K": 1, "genus": 1}
    v = genus_bound(6, 2, 1)
    assert v.status == "determined"
    assert v.data["genus"] == 2


def test_genus_bound_undetermined():
    assert genus_bound(4, 1, 1).status == "undetermined"  # even quotient
    assert genus_bound(3, 2, 1).status == "undetermined"  # non-integer
    assert genus_bound(0, 1, 1).status == "undetermined"
    assert genus_bound(-2, 1, 1).status == "undetermined"


def test_genus_bound_rejects_bad_shape():
    with pytest.raises(ValueError):
        genus_bound(3, 0, 1)


def test_fibered_criterion():
    assert fibered_mu_criterion([0, 0, 0]).status == "consistent"
    v = fibered_mu_criterion([0, 4, 0])
    assert v.status == "refuted"
    assert v.data["offending_mu"] == 4
    assert fibered_mu_criterion([0, None]).status == "refuted"
    with pytest.raises(EmptyReports):
        fibered_mu_criterion([])
