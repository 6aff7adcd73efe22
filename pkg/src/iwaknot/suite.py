"""Batch verification suite over a reproducible polynomial corpus.

The corpus mixes fixed anchor polynomials (knot Alexander polynomials
and their products, plus the mu = 4 example) with seeded random
integer polynomials of span <= 6 and coefficients bounded by 50.  Each
section replays one family of identities (formula cross-validation,
mu scaling, lambda bounds, degree recovery, twist-knot scans) and
reports PASS/FAIL rows with wall-clock timing.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor

from .domains import ZZ
from .errors import ConfigParse, IwaknotError, NoStabilization
from .laurent import LaurentPoly, parse_poly, format_poly, primitive_part
from .iwasawa import iwasawa_lambda_mu, verify_formula
from .detect import degree_recovery
from .twistknot import mu_zero_scan, residually_reducible_report
from .reports import FAIL, INFO, PASS, ScanReport, merge_reports

DEFAULT_CONFIG = {
    "seed": 20240814,
    "corpus_size": 50,
    "primes": [2, 3, 5, 7],
    "ms": [1, 2, 3, 4],
    "r_lo": 1,
    "r_hi": 3,
    "resource_cap": 10**5,
    "m_max_recovery": 12,
    "twist_n_lo": -3,
    "twist_n_hi": 3,
    "twist_primes": [2, 3, 5],
    "sections": [
        "iwasawa_formula",
        "mu_scaling",
        "lambda_bound",
        "degree_recovery",
        "twistknot_mu",
        "residually_reducible",
    ],
}

ANCHORS = [
    ("figure_eight", "t^2-3*t+1"),
    ("trefoil", "t^2-t+1"),
    ("five_two", "2*t^2-3*t+2"),
    ("fig8_m2_product", "t^4-7*t^2+1"),
    ("unknot_like", "t-1"),
    ("cyclotomic_2", "t+1"),
    ("cyclotomic_4", "t^2+1"),
    ("mu4_factor", "112*t^2+208*t+112"),
]


def load_config(path: str | None) -> dict:
    config = dict(DEFAULT_CONFIG)
    if path is None:
        return config
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
        if path.endswith(".toml"):
            try:
                import tomllib
            except ModuleNotFoundError:
                import tomli as tomllib

            data = tomllib.loads(raw.decode())
        else:
            data = json.loads(raw.decode())
    except (OSError, ValueError) as err:
        raise ConfigParse(str(err)) from err
    if not isinstance(data, dict):
        raise ConfigParse("config root must be a table/object")
    config.update(data)
    return config


def build_corpus(seed: int, size: int) -> list:
    """Anchor polynomials plus seeded random ones; names are stable."""
    out = [(name, parse_poly(text)) for name, text in ANCHORS]
    # squared holonomy norms exercise repeated factors
    out.append(("holonomy_plus_sq", parse_poly("t^2+4*t+1") ** 2))
    out.append(("holonomy_minus_sq", parse_poly("t^2-4*t+1") ** 2))
    rng = random.Random(seed)
    while len(out) < size + len(ANCHORS) + 2:
        span = rng.randint(1, 6)
        coeffs = [rng.randint(-50, 50) for _ in range(span + 1)]
        if coeffs[0] == 0:
            coeffs[0] = rng.choice([-1, 1]) * rng.randint(1, 50)
        if coeffs[-1] == 0:
            coeffs[-1] = rng.choice([-1, 1]) * rng.randint(1, 50)
        out.append((f"random_{len(out)}", LaurentPoly.from_coeffs(ZZ, coeffs)))
    return out


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("IWKNOT_THREADS", "1")))
    except ValueError:
        return 1


def section_iwasawa_formula(corpus, config) -> ScanReport:
    report = ScanReport("iwasawa_formula", {"grid": "corpus x p x m"})
    r_range = (config["r_lo"], config["r_hi"])
    jobs = [
        (name, f, p, m)
        for name, f in corpus
        for p in config["primes"]
        for m in config["ms"]
        if math.gcd(m, p) == 1
    ]

    cap = config["resource_cap"]

    def run(job):
        # stabilization may start past the initial r_hi; widen the window
        # as far as the resource cap allows before giving up
        name, f, p, m = job
        r_lo, r_hi = r_range
        while True:
            try:
                sub = verify_formula(f, p, m, (r_lo, r_hi), cap)
                return (name, p, m, sub.verdict, None)
            except NoStabilization as err:
                if m * p ** (r_hi + 1) > cap:
                    return (name, p, m, FAIL, f"NoStabilization: {err}")
                r_hi += 1
            except IwaknotError as err:
                return (name, p, m, FAIL, f"{type(err).__name__}: {err}")

    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]
    for name, p, m, verdict, err in results:
        report.add_row(
            PASS if verdict == PASS else FAIL,
            poly=name,
            p=p,
            m=m,
            **({"error": err} if err else {}),
        )
    return report


def section_mu_scaling(corpus, config) -> ScanReport:
    report = ScanReport("mu_scaling", {})
    for name, f in corpus:
        for p in config["primes"]:
            mu1 = iwasawa_lambda_mu(f, p, 1)[1]
            for m in config["ms"]:
                if math.gcd(m, p) != 1:
                    continue
                mu_m = iwasawa_lambda_mu(f, p, m)[1]
                report.add_row(
                    PASS if mu_m == m * mu1 else FAIL,
                    poly=name,
                    p=p,
                    m=m,
                    mu_m=mu_m,
                    mu_1=mu1,
                )
    return report


def section_lambda_bound(corpus, config) -> ScanReport:
    report = ScanReport("lambda_bound", {})
    for name, f in corpus:
        bound = f.span
        for p in config["primes"]:
            for m in config["ms"]:
                if math.gcd(m, p) != 1:
                    continue
                lam = iwasawa_lambda_mu(f, p, m)[0]
                report.add_row(
                    PASS if lam <= bound else FAIL,
                    poly=name,
                    p=p,
                    m=m,
                    lam=lam,
                    bound=bound,
                )
    return report


# -- dense F_p polynomial helpers for the unit-root qualification -----------

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        q = a[-1] * inv % p
        off = len(a) - 1 - db
        for i, c in enumerate(b):
            a[off + i] = (a[off + i] - q * c) % p
        _fp_trim(a)
    return a


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_div(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    out = [0] * (len(a) - db)
    while len(a) - 1 >= db and a:
        q = a[-1] * inv % p
        out[len(a) - 1 - db] = q
        off = len(a) - 1 - db
        for i, c in enumerate(b):
            a[off + i] = (a[off + i] - q * c) % p
        _fp_trim(a)
    return out


def unit_root_reduction_ok(f: LaurentPoly, p: int, max_order: int = 12) -> bool:
    """Is there a single m <= max_order, prime to p, whose unit roots
    account for every root of f mod p?

    Requires the reduction to keep full degree (p-unit leading and
    trailing coefficients); repeated gcd-stripping against t^m - 1
    must exhaust the polynomial.  A common witness m is what the
    degree-recovery search needs: root orders that only fit under
    distinct m (say 3 and 4 with max_order < 12) do not qualify.
    """
    prim = primitive_part(f.to_ordinary())
    coeffs = [int(c) % p for c in prim.coeff_list()]
    if coeffs[-1] == 0 or coeffs[0] == 0:
        return False
    for m in range(1, max_order + 1):
        if math.gcd(m, p) != 1:
            continue
        tm = [p - 1] + [0] * (m - 1) + [1]
        work = _fp_trim(list(coeffs))
        for _ in range(len(coeffs)):
            if len(work) <= 1:
                break
            g = _fp_gcd(work, tm, p)
            if len(g) <= 1:
                break
            work = _fp_div(work, g, p)
        if len(work) <= 1:
            return True
    return False


def section_degree_recovery(corpus, config) -> ScanReport:
    report = ScanReport("degree_recovery", {"m_max": config["m_max_recovery"]})
    m_max = config["m_max_recovery"]
    for name, f in corpus:
        prim = primitive_part(f)
        for p in config["primes"]:
            if int(prim.coeff(prim.max_exp)) % p == 0:
                continue
            qualified = unit_root_reduction_ok(f, p, m_max)
            verdict = degree_recovery(f, p, m_max)
            if qualified:
                ok = verdict.status == "recovered"
                report.add_row(
                    PASS if ok else FAIL,
                    poly=name,
                    p=p,
                    recovery=verdict.status,
                    witness=verdict.witnesses,
                )
            else:
                report.add_row(
                    INFO, poly=name, p=p, recovery=verdict.status, qualified=False
                )
    return report


def section_twistknot_mu(config) -> ScanReport:
    rows = []
    for n in range(config["twist_n_lo"], config["twist_n_hi"] + 1):
        if n == 0:
            continue
        for p in config["twist_primes"]:
            rows.append(mu_zero_scan(n, p))
    merged = merge_reports(rows, "twistknot_mu", {"grid": "n x p"})
    return merged


def section_residually_reducible(config) -> ScanReport:
    rows = []
    for n in range(config["twist_n_lo"], config["twist_n_hi"] + 1):
        if n == 0:
            continue
        for p in config["twist_primes"]:
            if (3 * n - 1) % p == 0:
                rows.append(residually_reducible_report(n, p))
    if not rows:
        report = ScanReport("residually_reducible", {})
        report.add_row(INFO, note="no (n, p) with p | 3n-1 in the configured grid")
        return report
    return merge_reports(rows, "residually_reducible", {"grid": "p | 3n-1"})


SECTIONS = {
    "iwasawa_formula": lambda corpus, config: section_iwasawa_formula(corpus, config),
    "mu_scaling": lambda corpus, config: section_mu_scaling(corpus, config),
    "lambda_bound": lambda corpus, config: section_lambda_bound(corpus, config),
    "degree_recovery": lambda corpus, config: section_degree_recovery(corpus, config),
    "twistknot_mu": lambda corpus, config: section_twistknot_mu(config),
    "residually_reducible": lambda corpus, config: section_residually_reducible(config),
}


def run_suite(config: dict | None = None) -> ScanReport:
    config = {**DEFAULT_CONFIG, **(config or {})}
    corpus = build_corpus(config["seed"], config["corpus_size"])
    summary = ScanReport("suite", {"config": config, "corpus_size": len(corpus)})
    for section in config["sections"]:
        if section not in SECTIONS:
            raise ConfigParse(f"unknown suite section {section!r}")
        start = time.perf_counter()
        sub = SECTIONS[section](corpus, config)
        elapsed = time.perf_counter() - start
        counts = sub.counts
        summary.add_row(
            PASS if sub.verdict == PASS else FAIL,
            section=section,
            passes=counts[PASS],
            fails=counts[FAIL],
            seconds=round(elapsed, 3),
        )
    return summary
