"""Command-line interface.

Subcommands: poly, resultant, mahler, iwasawa, wada, twistknot,
detect, suite.  Every command prints a JSON document to stdout;
--csv FILE additionally writes the tabular commands as CSV.  Exit
codes: 0 success/PASS, 1 FAIL verdict, 2 usage error, 3 computation
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import IwaknotError
from .laurent import (
    cyclic_resultant,
    format_poly,
    resultant,
    substitute_shift,
)
from .padic import asymptotic_check, gauss_norm_exponent, growth_table_csv, mahler_measure
from .iwasawa import nu_estimate, verify_formula
from .foxcalc import wada_invariant
from .twistknot import (
    TwistKnot,
    classical_alexander,
    mu_zero_scan,
    nonacyclic_points,
    residually_reducible_report,
)
from .detect import degree_recovery, genus_bound, monic_detect
from .serialize import (
    load_poly,
    poly_to_dict,
    presentation_from_dict,
    rep_from_dict,
)
from .suite import load_config, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_COMPUTE = 3


def _read_poly(path_or_text: str):
    try:
        with open(path_or_text) as fh:
            return load_poly(fh.read())
    except OSError:
        return load_poly(path_or_text)


def _emit(doc: dict, csv_path: str | None = None, csv_text: str | None = None):
    print(json.dumps(doc, indent=2, default=str))
    if csv_path and csv_text is not None:
        with open(csv_path, "w") as fh:
            fh.write(csv_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwaknot", description="Exact knot-polynomial invariants"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="parse, normalize, and emit a polynomial")
    p_poly.add_argument("--poly", required=True, help="file or inline expression")
    p_poly.add_argument("--shift", action="store_true", help="also expand at t = 1+T")

    p_res = sub.add_parser("resultant", help="cyclic or Sylvester resultant")
    p_res.add_argument("--poly", required=True)
    p_res.add_argument("--n", type=int, help="cyclic level Res(t^n - 1, f)")
    p_res.add_argument("--other", help="second polynomial for Res(f, g)")

    p_mah = sub.add_parser("mahler", help="Mahler measure and growth table")
    p_mah.add_argument("--poly", required=True)
    p_mah.add_argument("--tol", type=float, default=1e-6)
    p_mah.add_argument("--p", type=int, default=2)
    p_mah.add_argument("--n-max", type=int, default=0, help="emit growth rows up to n")
    p_mah.add_argument("--csv")

    p_iwa = sub.add_parser("iwasawa", help="lambda/mu/nu of a cover tower")
    p_iwa.add_argument("--poly", required=True)
    p_iwa.add_argument("--p", type=int, required=True)
    p_iwa.add_argument("--m", type=int, default=1)
    p_iwa.add_argument("--r-lo", type=int, default=1)
    p_iwa.add_argument("--r-hi", type=int, default=3)
    p_iwa.add_argument("--verify", action="store_true")

    p_wada = sub.add_parser("wada", help="determinant ratio from a presentation")
    p_wada.add_argument("--pres", required=True, help="presentation JSON file")
    p_wada.add_argument("--rep", required=True, help="representation JSON file")
    p_wada.add_argument("--gen", type=int, default=1, help="denominator generator index")

    p_tk = sub.add_parser("twistknot", help="twist-knot J(2,2n) reports")
    p_tk.add_argument(
        "action", choices=["info", "alexander", "scan-mu", "nonacyclic", "resred"]
    )
    p_tk.add_argument("--n", type=int, required=True)
    p_tk.add_argument("--p", type=int)

    p_det = sub.add_parser("detect", help="monicness / degree / genus diagnostics")
    p_det.add_argument("action", choices=["monic", "degree", "genus"])
    p_det.add_argument("--poly")
    p_det.add_argument("--p", type=int, default=5)
    p_det.add_argument("--p-max", type=int, default=37)
    p_det.add_argument("--m-max", type=int, default=12)
    p_det.add_argument("--lambda-tau", type=int)
    p_det.add_argument("--rank", type=int, default=1)
    p_det.add_argument("--degree-d", type=int, default=1)

    p_suite = sub.add_parser("suite", help="run the verification battery")
    p_suite.add_argument("--config", help="JSON or TOML config file")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _dispatch(args)
    except IwaknotError as err:
        print(
            json.dumps({"error": type(err).__name__, "message": str(err)}),
            file=sys.stderr,
        )
        return EXIT_COMPUTE
    except (OSError, ValueError) as err:
        print(json.dumps({"error": "usage", "message": str(err)}), file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "poly":
        f = _read_poly(args.poly)
        doc = {"poly": poly_to_dict(f), "text": format_poly(f), "span": f.span}
        if args.shift:
            doc["shifted"] = format_poly(substitute_shift(f), var="T")
        _emit(doc)
        return EXIT_OK

    if args.command == "resultant":
        f = _read_poly(args.poly)
        if args.n is None and args.other is None:
            print("one of --n / --other is required", file=sys.stderr)
            return EXIT_USAGE
        if args.n is not None:
            value, psi = cyclic_resultant(f, args.n)
            _emit({"n": args.n, "value": str(value), "psi": format_poly(psi)})
        else:
            g = _read_poly(args.other)
            _emit({"value": str(resultant(f, g))})
        return EXIT_OK

    if args.command == "mahler":
        f = _read_poly(args.poly)
        doc = {
            "mahler": mahler_measure(f, args.tol),
            "gauss_exponent": gauss_norm_exponent(f, args.p),
            "p": args.p,
        }
        csv_text = None
        if args.n_max:
            rows = asymptotic_check(f, args.n_max, args.p)
            csv_text = growth_table_csv(rows)
            doc["rows"] = [
                {
                    "n": r.n,
                    "resultant": str(r.resultant),
                    "root_growth": r.root_growth,
                    "p_part": r.p_part,
                }
                for r in rows
            ]
        _emit(doc, args.csv, csv_text)
        return EXIT_OK

    if args.command == "iwasawa":
        f = _read_poly(args.poly)
        triple = nu_estimate(f, args.p, args.m, (args.r_lo, args.r_hi))
        doc = {
            "lambda": triple.lam,
            "mu": triple.mu,
            "nu": triple.nu,
            "stable_from": triple.stable_from,
            "p": triple.p,
            "m": triple.m,
            "e_table": [
                {"r": r, "e": e, "psi_nontrivial": flag}
                for r, e, flag in triple.e_table
            ],
        }
        if args.verify:
            rep = verify_formula(f, args.p, args.m, (args.r_lo, args.r_hi))
            doc["verify"] = rep.to_dict()
            _emit(doc)
            return EXIT_OK if rep.verdict == "PASS" else EXIT_FAIL
        _emit(doc)
        return EXIT_OK

    if args.command == "wada":
        with open(args.pres) as fh:
            pres = presentation_from_dict(json.load(fh))
        with open(args.rep) as fh:
            rep = rep_from_dict(json.load(fh))
        num, den = wada_invariant(pres, rep, args.gen)
        _emit({"numerator": format_poly(num), "denominator": format_poly(den)})
        return EXIT_OK

    if args.command == "twistknot":
        return _twistknot(args)

    if args.command == "detect":
        return _detect(args)

    if args.command == "suite":
        config = load_config(args.config)
        report = run_suite(config)
        print(report.to_json())
        return EXIT_OK if report.verdict == "PASS" else EXIT_FAIL

    return EXIT_USAGE


def _twistknot(args) -> int:
    knot = TwistKnot(args.n)
    if args.action == "info":
        _emit({"n": knot.n, "name": knot.name, "fibered": knot.fibered})
        return EXIT_OK
    if args.action == "alexander":
        d0, d1 = classical_alexander(args.n)
        _emit({"delta0": format_poly(d0), "delta1": format_poly(d1)})
        return EXIT_OK
    if args.p is None:
        print("--p is required for this action", file=sys.stderr)
        return EXIT_USAGE
    if args.action == "scan-mu":
        report = mu_zero_scan(args.n, args.p)
    elif args.action == "nonacyclic":
        pts = nonacyclic_points(args.n, args.p)
        _emit(
            {
                "n": args.n,
                "p": args.p,
                "points": [
                    {"x": pt.domain.format(pt.x), "y": pt.domain.format(pt.y)}
                    for pt in pts
                ],
            }
        )
        return EXIT_OK
    else:
        report = residually_reducible_report(args.n, args.p)
    print(report.to_json())
    return EXIT_OK if report.verdict == "PASS" else EXIT_FAIL


def _detect(args) -> int:
    if args.action == "genus":
        if args.lambda_tau is None:
            print("--lambda-tau is required for genus", file=sys.stderr)
            return EXIT_USAGE
        verdict = genus_bound(args.lambda_tau, args.rank, args.degree_d)
    else:
        if args.poly is None:
            print("--poly is required", file=sys.stderr)
            return EXIT_USAGE
        f = _read_poly(args.poly)
        if args.action == "monic":
            primes = [p for p in range(2, args.p_max + 1) if _is_prime(p)]
            verdict = monic_detect(f, primes, args.m_max)
        else:
            verdict = degree_recovery(f, args.p, args.m_max)
    _emit(
        {
            "kind": verdict.kind,
            "status": verdict.status,
            "data": verdict.data,
            "witnesses": verdict.witnesses,
        }
    )
    return EXIT_OK


def _is_prime(p: int) -> bool:
    from .domains import is_prime

    return is_prime(p)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
