"""Iwasawa invariants (lambda, mu, nu) of cyclic-resultant towers.

Two independent extraction routes are implemented and cross-checked:

  * Weierstrass route: form g with g(t^m) = prod_{zeta^m=1} f(zeta t),
    expand g((1+T)^m) exactly, and read (mu, lambda) off the
    coefficient valuations (p-adic Weierstrass preparation).
  * Resultant route: the p-valuation e_r of the cyclic resultant at
    level m p^r satisfies e_r = lambda r + mu p^r + nu for r >> 0;
    nu is fitted once the offset stabilizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    MNotCoprime,
    NoStabilization,
    ResourceCapExceeded,
    ZeroPolynomial,
)
from .laurent import (
    LaurentPoly,
    cyclic_resultant,
    cyclotomic_product,
    format_poly,
    substitute_power,
    substitute_shift,
)
from .padic import _vp
from .reports import FAIL, INFO, PASS, ScanReport

DEFAULT_RESOURCE_CAP = 10 ** 5


@dataclass(frozen=True)
class WeierstrassData:
    p: int
    mu: int
    lam: int
    coefficient_valuations: tuple


@dataclass(frozen=True)
class IwasawaTriple:
    lam: int
    mu: int
    nu: int
    stable_from: int
    p: int
    m: int
    e_table: tuple  # (r, e_r, psi_nontrivial) rows
    # invariant: e_r = lam*r + mu*p^r + nu for all r >= stable_from


def weierstrass_extract(coeffs, p: int) -> WeierstrassData:
    """(mu, lambda) of a power series with integer polynomial truncation.

    mu is the minimal coefficient valuation; lambda is the first index
    attaining it.  Coefficients below index lambda have strictly larger
    valuation, which is exactly the distinguished-polynomial shape
    p^mu (T^lambda + p * lower).
    """
    if isinstance(coeffs, LaurentPoly):
        if coeffs.is_zero:
            raise ZeroPolynomial("Weierstrass preparation of 0")
        lo = coeffs.min_exp
        if lo < 0:
            raise ValueError("power-series coefficients cannot have negative index")
        seq = [int(coeffs.coeff(i)) for i in range(0, coeffs.max_exp + 1)]
    else:
        seq = [int(c) for c in coeffs]
    if not any(seq):
        raise ZeroPolynomial("Weierstrass preparation of 0")
    vals = [_vp(c, p) if c else math.inf for c in seq]
    mu = min(vals)
    lam = vals.index(mu)
    return WeierstrassData(p=p, mu=int(mu), lam=lam, coefficient_valuations=tuple(vals))


def iwasawa_lambda_mu(f: LaurentPoly, p: int, m: int) -> tuple:
    """(lambda, mu) of the level-m product prod_{zeta^m=1} f(zeta(1+T))."""
    if f.is_zero:
        raise ZeroPolynomial("Iwasawa invariants of 0")
    if m < 1 or math.gcd(m, p) != 1:
        raise MNotCoprime(f"m={m} must be a positive integer coprime to p={p}")
    g = cyclotomic_product(f, m)
    series = substitute_shift(substitute_power(g, m))
    data = weierstrass_extract(series, p)
    return data.lam, data.mu


def _check_cap(m: int, p: int, r_hi: int, resource_cap: int):
    if m * p ** r_hi > resource_cap:
        raise ResourceCapExceeded(
            f"m*p^r_hi = {m * p ** r_hi} exceeds the cap {resource_cap}"
        )


def _e_table(f: LaurentPoly, p: int, m: int, r_lo: int, r_hi: int):
    rows = []
    for r in range(r_lo, r_hi + 1):
        value, psi = cyclic_resultant(f, m * p ** r)
        if isinstance(value, Fraction):
            e = _vp(value.numerator, p) - _vp(value.denominator, p)
        else:
            e = _vp(int(value), p)
        rows.append((r, e, psi.span > 0))
    return rows


def nu_estimate(
    f: LaurentPoly,
    p: int,
    m: int,
    r_range=(1, 3),
    resource_cap: int = DEFAULT_RESOURCE_CAP,
) -> IwasawaTriple:
    """Fit nu in e_r = lambda r + mu p^r + nu over the sampled r-range.

    stable_from is the least r from which the offset nu is constant
    through r_hi; at least two consecutive stable values are required.
    """
    r_lo, r_hi = r_range
    if r_hi - r_lo < 2:
        raise ValueError("r_range must span at least three levels")
    _check_cap(m, p, r_hi, resource_cap)
    lam, mu = iwasawa_lambda_mu(f, p, m)
    table = _e_table(f, p, m, r_lo, r_hi)
    offsets = [e - lam * r - mu * p ** r for r, e, _ in table]
    stable_from = None
    for i in range(len(offsets) - 1):
        if len(set(offsets[i:])) == 1:
            stable_from = table[i][0]
            break
    if stable_from is None:
        raise NoStabilization(
            f"nu offset never stabilized over r in [{r_lo}, {r_hi}]: {offsets}"
        )
    return IwasawaTriple(
        lam=lam,
        mu=mu,
        nu=offsets[-1],
        stable_from=stable_from,
        p=p,
        m=m,
        e_table=tuple(table),
    )


def verify_formula(
    f: LaurentPoly,
    p: int,
    m: int,
    r_range=(1, 3),
    resource_cap: int = DEFAULT_RESOURCE_CAP,
) -> ScanReport:
    """Cross-check the Weierstrass route against resultant differences.

    PASS iff e_r - e_{r-1} = lambda + mu (p^r - p^{r-1}) for every r
    past the stabilization point.
    """
    report = ScanReport(
        "verify_formula",
        {"poly": format_poly(f), "p": p, "m": m, "r_range": list(r_range)},
    )
    triple = nu_estimate(f, p, m, r_range, resource_cap)
    table = {r: (e, flag) for r, e, flag in triple.e_table}
    report.add_row(
        INFO,
        lam=triple.lam,
        mu=triple.mu,
        nu=triple.nu,
        stable_from=triple.stable_from,
    )
    for r in range(triple.stable_from + 1, r_range[1] + 1):
        e_r, flag_r = table[r]
        e_prev, flag_prev = table[r - 1]
        expected = triple.lam + triple.mu * (p ** r - p ** (r - 1))
        ok = (e_r - e_prev) == expected
        report.add_row(
            PASS if ok else FAIL,
            r=r,
            e_r=e_r,
            difference=e_r - e_prev,
            expected=expected,
            psi_nontrivial=flag_r or flag_prev,
        )
    return report


def reidemeister_iwasawa(f1: LaurentPoly, f0: LaurentPoly, p: int, m: int) -> tuple:
    """(lambda_tau, mu_tau) = componentwise difference of the two factors."""
    if f0.is_zero or f1.is_zero:
        raise ZeroPolynomial("torsion factors must be nonzero")
    l1, m1 = iwasawa_lambda_mu(f1, p, m)
    l0, m0 = iwasawa_lambda_mu(f0, p, m)
    return l1 - l0, m1 - m0


def lambda_sup(f: LaurentPoly, p: int, m_max: int) -> tuple:
    """(max lambda over 1 <= m <= m_max with gcd(m, p) = 1, earliest witness).

    lambda is bounded by the degree of f, so the scan exits early once
    the bound is attained.
    """
    if f.is_zero:
        raise ZeroPolynomial("lambda_sup of 0")
    bound = f.span
    best = -1
    witness = None
    for m in range(1, m_max + 1):
        if math.gcd(m, p) != 1:
            continue
        lam, _ = iwasawa_lambda_mu(f, p, m)
        if lam > best:
            best = lam
            witness = m
        if best >= bound:
            break
    return best, witness
