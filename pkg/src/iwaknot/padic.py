"""p-adic valuations, Gauss norms, Mahler measures, and growth tables.

The Mahler measure of an integer polynomial is |leading| * prod over
roots of max(1, |alpha|); the p-adic counterpart is the Gauss norm
p^{-min_i v_p(a_i)}.  The asymptotic table tracks how the cyclic
resultants r_n = Res(t^n - 1, f) grow: |r_n|^{1/n} converges to the
Mahler measure and the p-part converges to the Gauss norm.
"""

from __future__ import annotations

import io
import math
import csv
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .domains import is_prime
from .errors import ConvergenceFailure, ZeroPolynomial
from .laurent import LaurentPoly, cyclic_resultant

INFINITY = math.inf

# roots this close to |z| = 1 are treated as lying exactly on the circle
UNIT_CIRCLE_SNAP = 1e-9


@dataclass(frozen=True)
class Valuation:
    """p-adic valuation; value is a nonnegative integer or +inf for 0."""

    value: float  # int in practice, math.inf for 0

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY

    def norm(self, p: int) -> float:
        """|a|_p = p^{-v}."""
        return 0.0 if self.is_infinite else float(p) ** (-self.value)


def valuation(a, p: int) -> Valuation:
    """Exact p-adic valuation of an integer or Fraction."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(a, Fraction):
        if a == 0:
            return Valuation(INFINITY)
        return Valuation(_vp(a.numerator, p) - _vp(a.denominator, p))
    a = int(a)
    if a == 0:
        return Valuation(INFINITY)
    return Valuation(_vp(a, p))


def _vp(a: int, p: int) -> int:
    a = abs(a)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def gauss_norm_exponent(f: LaurentPoly, p: int) -> int:
    """min_i v_p(a_i); the Gauss norm of f is p^(-result)."""
    if f.is_zero:
        raise ZeroPolynomial("Gauss norm of the zero polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return min(_vp(int(c), p) for c in f.terms.values())


@dataclass(frozen=True)
class MeasureReport:
    mahler: float
    gauss_exponent: int
    roots: tuple  # root magnitudes, descending


def _root_magnitudes(coeffs) -> list:
    """Magnitudes of the roots of sum coeffs[i] t^i, via the companion matrix."""
    scale = max(abs(c) for c in coeffs)
    floats = [float(Fraction(int(c), scale)) for c in coeffs]
    # numpy expects highest degree first
    try:
        roots = np.roots(floats[::-1])
    except Exception as exc:  # linalg non-convergence
        raise ConvergenceFailure(str(exc)) from exc
    return [abs(complex(r)) for r in roots]


def _graeffe_step(coeffs):
    """Coefficients of g with g(t^2) = +- f(t) f(-t); squares the roots."""
    n = len(coeffs)
    prod = [0] * (2 * n - 1)
    for i, a in enumerate(coeffs):
        if a:
            for j, b in enumerate(coeffs):
                if b:
                    s = b if j % 2 == 0 else -b
                    prod[i + j] += a * s
    return prod[::2]


def mahler_measure(f: LaurentPoly, tol: float = 1e-6) -> float:
    """|leading| * prod max(1, |alpha_i|) over the complex roots of f.

    Double-precision companion-matrix roots by default; for tight
    tolerances a few exact Graeffe (root-squaring) steps are applied
    first, which contracts the relative error of each magnitude by the
    same power.  Roots within 1e-9 of the unit circle count as exactly 1.
    """
    if f.is_zero:
        raise ZeroPolynomial("Mahler measure of the zero polynomial")
    coeffs = [int(c) for c in f.to_ordinary().coeff_list()]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) == 1:
        return float(abs(coeffs[0]))
    steps = 0
    if tol < 1e-8:
        steps = 4  # magnitudes are taken to the 2^4 = 16th root afterwards
        work = list(coeffs)
        for _ in range(steps):
            work = _graeffe_step(work)
    else:
        work = coeffs
    mags = _root_magnitudes(work)
    measure = float(abs(coeffs[-1]))
    root_power = 1 << steps
    for m in mags:
        m = m ** (1.0 / root_power)
        if abs(m - 1.0) <= UNIT_CIRCLE_SNAP:
            continue
        if m > 1.0:
            measure *= m
    return measure


def measure_report(f: LaurentPoly, p: int, tol: float = 1e-6) -> MeasureReport:
    coeffs = [int(c) for c in f.to_ordinary().coeff_list()]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    mags = sorted(_root_magnitudes(coeffs), reverse=True) if len(coeffs) > 1 else []
    return MeasureReport(
        mahler=mahler_measure(f, tol),
        gauss_exponent=gauss_norm_exponent(f, p),
        roots=tuple(mags),
    )


@dataclass(frozen=True)
class GrowthRow:
    n: int
    resultant: int
    root_growth: float  # |r_n|^{1/n}
    p_part: float  # p^{-v_p(r_n)/n}
    psi_nontrivial: bool


def asymptotic_check(f: LaurentPoly, n_max: int, p: int, step: int = 1) -> list:
    """Rows (n, r_n, |r_n|^{1/n}, p^{-v_p(r_n)/n}) for n up to n_max.

    r_n is the cyclic resultant under the quotient convention; rows where
    the gcd factor psi was nontrivial are flagged.
    """
    if f.is_zero:
        raise ZeroPolynomial("asymptotic table of the zero polynomial")
    rows = []
    for n in range(1, n_max + 1, step):
        value, psi = cyclic_resultant(f, n)
        r = int(value) if not isinstance(value, Fraction) else value
        mag = abs(r)
        growth = math.exp(math.log(mag) / n) if mag not in (0, 1) else float(mag)
        v = _vp(int(r), p) if r != 0 else 0
        rows.append(
            GrowthRow(
                n=n,
                resultant=r,
                root_growth=growth,
                p_part=float(p) ** (-v / n),
                psi_nontrivial=(psi.span > 0 if not psi.is_zero else False),
            )
        )
    return rows


def growth_table_csv(rows: list) -> str:
    """CSV with columns n, resultant, root_growth, p_part."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "resultant", "root_growth", "p_part"])
    for row in rows:
        writer.writerow(
            [row.n, str(row.resultant), f"{row.root_growth:.12g}", f"{row.p_part:.12g}"]
        )
    return buf.getvalue()
