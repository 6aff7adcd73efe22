"""Diagnostics recovered from scanned Iwasawa invariants.

The lambda invariants of the m-fold products recover the degree of the
underlying polynomial (for p prime to the leading coefficient), the
collection of (mu, sup-lambda) values over several p detects whether
the polynomial is monic up to a unit, and lambda of a torsion ratio
bounds the Thurston norm / genus.  The fiberedness verdict is
deliberately three-valued: a finite scan can refute but never prove.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .domains import is_prime
from .errors import EmptyReports, ZeroPolynomial
from .laurent import LaurentPoly, primitive_part
from .iwasawa import iwasawa_lambda_mu, lambda_sup
from fractions import Fraction

DEFAULT_M_MAX = 12
DEFAULT_P_LIST = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class DetectionVerdict:
    kind: str  # DegreeRecovered | MonicVerdict | GenusBound | FiberedFlag
    status: str
    data: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)


def degree_recovery(f: LaurentPoly, p: int, m_max: int = DEFAULT_M_MAX) -> DetectionVerdict:
    """Search m <= m_max coprime to p for lambda = deg f.

    Returns status "recovered" with the witness m' on success, or
    "partial" with the best lambda found (guaranteed when p divides the
    leading coefficient of the primitive part, where only an upper
    bound is available).
    """
    if f.is_zero:
        raise ZeroPolynomial("degree recovery of 0")
    prim = primitive_part(f)
    target = prim.span
    lead_unit = int(prim.coeff(prim.max_exp)) % p != 0
    best, witness = -1, None
    for m in range(1, m_max + 1):
        if math.gcd(m, p) != 1:
            continue
        lam, _ = iwasawa_lambda_mu(f, p, m)
        if lam > best:
            best, witness = lam, m
        if best == target:
            return DetectionVerdict(
                kind="DegreeRecovered",
                status="recovered",
                data={"degree": target, "max_lambda": best},
                witnesses={"p": p, "m": witness},
            )
    return DetectionVerdict(
        kind="DegreeRecovered",
        status="partial",
        data={
            "degree_upper_bound": target,
            "max_lambda": best,
            "leading_coefficient_p_unit": lead_unit,
        },
        witnesses={"p": p, "m": witness},
    )


def monic_detect(
    f: LaurentPoly, p_list=DEFAULT_P_LIST, m_max: int = DEFAULT_M_MAX
) -> DetectionVerdict:
    """Monic iff every mu_p (at m = 1) is 0 and sup_m lambda_{p,m} is constant in p.

    The evidence dict records (mu, max lambda) per prime.  A finite m
    range can miss unit roots of very high order; such polynomials get
    status "monic-scan" semantics rather than a proof.
    """
    if f.is_zero:
        raise ZeroPolynomial("monic detection of 0")
    evidence = {}
    for p in p_list:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        _, mu = iwasawa_lambda_mu(f, p, 1)
        lam_max, lam_witness = lambda_sup(f, p, m_max)
        evidence[p] = {"mu": mu, "max_lambda": lam_max, "witness_m": lam_witness}
    mus_zero = all(e["mu"] == 0 for e in evidence.values())
    lam_values = {e["max_lambda"] for e in evidence.values()}
    monic = mus_zero and len(lam_values) == 1
    return DetectionVerdict(
        kind="MonicVerdict",
        status="monic" if monic else "non-monic",
        data={
            "monic": monic,
            "mus_all_zero": mus_zero,
            "lambda_values": sorted(lam_values),
        },
        witnesses={"p_list": list(p_list), "m_max": m_max, "evidence": evidence},
    )


def genus_bound(lambda_tau: int, N: int, d: int) -> DetectionVerdict:
    """Thurston-norm candidate x = max(0, lambda_tau / (N d)); x = 2g - 1.

    Determined only when the quotient is an odd integer; otherwise the
    scan has not reached a sharp representation.
    """
    if N < 1 or d < 1:
        raise ValueError("N and d must be >= 1")
    ratio = Fraction(lambda_tau, N * d)
    x_candidate = max(Fraction(0), ratio)
    if x_candidate > 0 and x_candidate.denominator == 1 and x_candidate.numerator % 2 == 1:
        g = (int(x_candidate) + 1) // 2
        return DetectionVerdict(
            kind="GenusBound",
            status="determined",
            data={"x_K": int(x_candidate), "genus": g},
            witnesses={"lambda_tau": lambda_tau, "N": N, "d": d},
        )
    return DetectionVerdict(
        kind="GenusBound",
        status="undetermined",
        data={"x_K_candidate": str(x_candidate)},
        witnesses={"lambda_tau": lambda_tau, "N": N, "d": d},
    )


def fibered_mu_criterion(mu_values) -> DetectionVerdict:
    """Fiberedness needs mu_1 = 0 for every representation.

    mu_values holds one entry per scanned representation: a nonnegative
    integer, or None when the twisted polynomial vanished (invariants
    undefined).  Any positive mu or undefined entry refutes; otherwise
    the scan is merely consistent with fiberedness.
    """
    values = list(mu_values)
    if not values:
        raise EmptyReports("fiberedness verdict over an empty scan")
    bad = [v for v in values if v is None or v > 0]
    if bad:
        return DetectionVerdict(
            kind="FiberedFlag",
            status="refuted",
            data={"offending_mu": bad[0], "count": len(bad)},
            witnesses={"scanned": len(values)},
        )
    return DetectionVerdict(
        kind="FiberedFlag",
        status="consistent",
        data={"note": "scan-scale evidence only; not a proof"},
        witnesses={"scanned": len(values)},
    )
