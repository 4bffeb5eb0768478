"""Command-line frontend with deterministic, machine-readable output.

Every subcommand prints a single JSON envelope on stdout:

    {"command": ..., "params": ..., "result": ..., "timing_ms": ..., "version": ...}

with keys sorted lexicographically, or CSV rows via --format csv.  Exit
codes: 0 success / witness found / conditions met; 1 proven negative
(no witness, not a deep-hole query answered "no", conditions not met);
2 invalid parameters; 3 budget exceeded or a size guard tripped.

In --deterministic mode timing_ms is pinned to 0 so repeated runs are
byte-identical.
"""

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from fractions import Fraction

from . import __version__, bounds, gf, rscode, symmetric, witness
from .errors import (CapExceeded, DeepholeError, TooLargeForBruteForce,
                     TooLargeForExhaustive, TooManyVariables)
from .poly import UPoly, mv_eval

DEFAULT_SEED = 0x5EED

ENVELOPE_SCHEMA = {
    "type": "object",
    "required": ["command", "params", "result", "timing_ms", "version"],
    "properties": {
        "command": {"type": "string"},
        "params": {"type": "object"},
        "result": {"type": "object"},
        "timing_ms": {"type": "integer", "minimum": 0},
        "version": {"type": "string"},
    },
    "additionalProperties": False,
}

_GUARD_ERRORS = (TooLargeForBruteForce, TooLargeForExhaustive, CapExceeded,
                 TooManyVariables)


def _ints(text):
    return [int(v) for v in text.split(",")] if text else []


def _field_from_args(args):
    if getattr(args, "q", None) is not None:
        return gf.field_from_order(args.q)
    modulus = _ints(args.modulus) if getattr(args, "modulus", None) else None
    return gf.make_field(args.p, getattr(args, "s", 1) or 1, modulus)


def _threads(args):
    if args.deterministic:
        return 1
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("DEEPHOLE_THREADS", "1"))


def _sym_terms(sp):
    return {"(" + ",".join(str(e) for e in exps) + ")": c
            for exps, c in sorted(sp.terms.items())}


def _cert_json(cert):
    if cert is None:
        return None
    return {"point": list(cert.point), "r": list(cert.r.coeffs),
            "agreements": cert.agreements, "distance_bound": cert.distance_bound}


# -- handlers: each returns (result dict, csv rows, exit code) ---------------

def cmd_field(args):
    f = _field_from_args(args)
    result = {"p": f.p, "s": f.s, "q": f.q,
              "modulus": list(f.modulus) if f.modulus else None,
              "num_units": f.q - 1}
    if args.list_units:
        result["units"] = list(f.units_reps())
    return result, [{"p": f.p, "s": f.s, "q": f.q}], 0


def cmd_hd(args):
    f = _field_from_args(args)
    rec = symmetric.h_basis_recursive(args.d, f)
    exp = symmetric.h_basis_explicit(args.d, f)
    terms = _sym_terms(rec)
    rows = [{"tuple": k, "coeff": v} for k, v in terms.items()]
    result = {"d": args.d, "terms": terms, "constructions_agree": rec == exp}
    return result, rows, 0 if rec == exp else 1


def cmd_hf_eval(args):
    f = _field_from_args(args)
    top = symmetric.TopPoly(f, args.k, args.d, _ints(args.f))
    x = _ints(args.x)
    value = symmetric.eval_hf(top, x)
    result = {"value": value, "k": args.k, "d": args.d, "x": x}
    return result, [{"value": value}], 0


def cmd_search(args):
    f = _field_from_args(args)
    code = rscode.RSCode(f, args.k)
    top = symmetric.TopPoly(f, args.k, args.d, _ints(args.f))
    sr = witness.search_good_point(top, code, budget=args.budget,
                                   threads=_threads(args))
    result = {"status": sr.status, "witness": _cert_json(sr.cert),
              "evals": sr.evals}
    code_map = {witness.FOUND: 0, witness.NO_WITNESS: 1, witness.BUDGET_EXCEEDED: 3}
    rows = [{"status": sr.status, "evals": sr.evals}]
    return result, rows, code_map[sr.status]


def cmd_deephole(args):
    f = _field_from_args(args)
    code = rscode.RSCode(f, args.k)
    poly = UPoly(f, _ints(args.f))
    word = rscode.word_from_poly(code, poly)
    dist = rscode.distance_to_code(code, word)
    verdict = "deep_hole" if dist == code.covering_radius else "not_deep_hole"
    result = {"verdict": verdict, "distance": dist,
              "covering_radius": code.covering_radius}
    if poly.degree >= code.k:
        top = rscode.canonical_top(code, poly)
        result["top"] = {"k": top.k, "d": top.d, "lows": list(top.lows)}
    return result, [{"verdict": verdict, "distance": dist}], 0 if verdict == "deep_hole" else 1


def cmd_verify_identities(args):
    f = _field_from_args(args)
    report = symmetric.jacobian_identities(args.kplus1, f)
    checks = dict(report)
    checks["derivative_recurrence"] = all(
        symmetric.derivative_recurrence_holds(j, args.kplus1, f)
        for j in range(2, args.kplus1 + 1))
    checks["basis_constructions_agree"] = all(
        symmetric.h_basis_recursive(d, f) == symmetric.h_basis_explicit(d, f)
        for d in range(0, args.kplus1 + 1))
    rng = random.Random(args.seed)
    k = args.kplus1 - 1
    mismatches = 0
    for _ in range(args.trials):
        d = rng.randint(1, max(1, k))
        top = symmetric.TopPoly(f, k, d, [rng.randrange(f.q) for _ in range(d)])
        x = [rng.randrange(f.q) for _ in range(k + 1)]
        v1 = symmetric.eval_hf(top, x)
        v2 = mv_eval(symmetric.expand_to_vars(symmetric.g_f(top), k + 1), x)
        if v1 != v2:
            mismatches += 1
        if symmetric.grad_hf(top, x) != symmetric.grad_hf_horner(top, x):
            mismatches += 1
    checks["random_route_agreement"] = mismatches == 0
    checks.pop("all_pass", None)
    ok = all(checks.values())
    result = {"kplus1": args.kplus1, "checks": checks, "all_pass": ok,
              "trials": args.trials}
    rows = [{"check": k_, "passed": v} for k_, v in sorted(checks.items())]
    return result, rows, 0 if ok else 1


def _scan_result(report):
    points = [{"x": list(x), "distinct_coords": m} for x, m in report.points]
    return {"count": len(points), "points": points,
            "max_distinct_coords": report.max_distinct_coords,
            "within_bound": report.within_bound,
            "full_linear_families": report.full_linear_families}


def cmd_singular_scan(args):
    f = _field_from_args(args)
    code = rscode.RSCode(f, args.k)
    top = symmetric.TopPoly(f, args.k, args.d, _ints(args.f))
    report = witness.scan_rational_singular_points(top, code)
    result = _scan_result(report)
    rows = [{"x": ",".join(map(str, x)), "distinct_coords": m}
            for x, m in report.points]
    return result, rows, 0 if report.within_bound else 1


def cmd_infinity_scan(args):
    f = _field_from_args(args)
    code = rscode.RSCode(f, args.k)
    top = symmetric.TopPoly(f, args.k, args.d, _ints(args.f))
    report = witness.scan_infinity_singular(top, code)
    result = _scan_result(report)
    result["includes_origin"] = (0,) * (args.k + 1) in report.point_set()
    rows = [{"x": ",".join(map(str, x)), "distinct_coords": m}
            for x, m in report.points]
    return result, rows, 0 if report.within_bound else 1


def cmd_artin_schreier(args):
    f = gf.make_field(args.p, args.s)
    asw = witness.artin_schreier_witness(f, args.k, args.d)
    result = {"b_list": list(asw.b_list), "g": list(asw.g.coeffs),
              "h": list(asw.h.coeffs), "root_count": asw.root_count,
              "distance": asw.distance, "covering_radius": asw.covering_radius,
              "not_deep_hole": asw.distance < asw.covering_radius}
    rows = [{"root_count": asw.root_count, "distance": asw.distance}]
    return result, rows, 0


def cmd_bounds(args):
    result = {}
    rows = []
    affine = bounds.affine_lower_bound(args.q, args.k, args.d)
    result["affine_lower_bound"] = affine.to_json()
    result["n1_bound"] = str(bounds.n1_bound(args.q, args.k, args.d))
    result["n2_bound"] = str(bounds.n2_bound(args.q, args.k, args.d))
    useful = bounds.useful_points_lower_bound(args.q, args.k, args.d,
                                              large_char=args.large_char)
    result["useful_points_lower_bound"] = useful.to_json()
    if args.gl_m is not None:
        result["gl_estimate"] = bounds.gl_estimate_terms(
            args.gl_m, args.gl_s, args.d, args.q).to_json()
    if args.csm_m is not None:
        result["c_sm"] = bounds.c_sm_bound(args.csm_m, args.d).to_json()
    for name in ("affine_lower_bound", "useful_points_lower_bound"):
        rows.append({"bound": name, "value": result[name]["value"],
                     "positive": result[name]["positive"]})
    rows.append({"bound": "n1_bound", "value": result["n1_bound"], "positive": True})
    rows.append({"bound": "n2_bound", "value": result["n2_bound"], "positive": True})
    return result, rows, 0


def cmd_thresholds(args):
    eps = Fraction(args.epsilon)
    report = bounds.theorem_conditions(args.q, args.k, args.d, eps,
                                       large_char=args.large_char,
                                       p=args.char_p)
    result = report.to_json()
    if report.verdict == bounds.CONDITIONS_MET:
        useful = bounds.useful_points_lower_bound(args.q, args.k, args.d,
                                                  large_char=args.large_char)
        result["useful_bound_positive"] = useful.value.is_positive()
    rows = [{"verdict": report.verdict,
             "reasons": ";".join(report.reasons)}]
    return result, rows, 0 if report.verdict == bounds.CONDITIONS_MET else 1


def cmd_equivalence_sweep(args):
    f = _field_from_args(args)
    code = rscode.RSCode(f, args.k)
    report = witness.equivalence_sweep(code, args.d, threads=_threads(args))
    result = {"q": report.q, "k": report.k, "d": report.d,
              "instances": report.instances, "deep_holes": report.deep_holes,
              "witnesses": report.witnesses,
              "counterexamples": report.counterexamples,
              "equivalence_holds": report.equivalence_holds}
    rows = [{"lows": ",".join(map(str, ce["lows"])),
             "is_deep_hole": ce["is_deep_hole"], "search": ce["search"]}
            for ce in report.counterexamples]
    return result, rows, 0 if report.equivalence_holds else 1


# -- plumbing ---------------------------------------------------------------

def _add_common(sp):
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--seed", type=lambda v: int(v, 0), default=DEFAULT_SEED,
                    help="seed for randomized suites (default 0x5EED)")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--threads", type=int, default=None,
                    help="worker threads (default $DEEPHOLE_THREADS or 1)")
    sp.add_argument("--deterministic", action="store_true",
                    help="single-threaded canonical order, timing_ms pinned to 0")


def _add_field(sp, q_shortcut=True):
    if q_shortcut:
        sp.add_argument("--q", type=int, help="field order (prime power)")
    sp.add_argument("--p", type=int, help="characteristic")
    sp.add_argument("--s", type=int, default=1, help="extension degree")
    sp.add_argument("--modulus", help="modulus coefficients c0,c1,...,cs (monic)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="deephole",
        description="Exact Reed-Solomon deep-hole workbench. Polynomial "
                    "coefficients are always listed low degree first: for "
                    "TopPoly subcommands --f gives f_0,...,f_{d-1} (the low "
                    "coefficients of the monic top part); `deephole` takes "
                    "the FULL coefficient list c0,c1,... (so T^2 is 0,0,1).")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="construct and describe a field")
    _add_field(sp, q_shortcut=False)
    sp.add_argument("--list-units", action="store_true")
    _add_common(sp)
    sp.set_defaults(handler=cmd_field)

    sp = sub.add_parser("hd", help="basis element of given weight in the Y variables")
    _add_field(sp, q_shortcut=False)
    sp.add_argument("--d", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(handler=cmd_hd)

    sp = sub.add_parser("hf-eval", help="pointwise top remainder coefficient")
    _add_field(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--f", default="", help="f_0,...,f_{d-1} (low first)")
    sp.add_argument("--x", required=True, help="point x_1,...,x_{k+1}")
    _add_common(sp)
    sp.set_defaults(handler=cmd_hf_eval)

    sp = sub.add_parser("search", help="search for a witness point")
    _add_field(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--f", default="", help="f_0,...,f_{d-1} (low first)")
    sp.add_argument("--budget", type=int, default=None,
                    help="cap on pointwise evaluations (default exhaustive)")
    _add_common(sp)
    sp.set_defaults(handler=cmd_search)

    sp = sub.add_parser("deephole", help="brute-force deep-hole verdict for a full polynomial")
    _add_field(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--f", required=True,
                    help="FULL coefficient list c0,c1,... low degree first")
    _add_common(sp)
    sp.set_defaults(handler=cmd_deephole)

    sp = sub.add_parser("verify-identities", help="symbolic and randomized identity suite")
    _add_field(sp, q_shortcut=False)
    sp.add_argument("--kplus1", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(handler=cmd_verify_identities)

    sp = sub.add_parser("singular-scan", help="exhaustive rational singular points")
    _add_field(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--f", default="", help="f_0,...,f_{d-1} (low first)")
    _add_common(sp)
    sp.set_defaults(handler=cmd_singular_scan)

    sp = sub.add_parser("infinity-scan", help="exhaustive singular-at-infinity system")
    _add_field(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--f", default="", help="f_0,...,f_{d-1} (low first)")
    _add_common(sp)
    sp.set_defaults(handler=cmd_infinity_scan)

    sp = sub.add_parser("artin-schreier", help="monomial witness from trace-zero trinomials")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(handler=cmd_artin_schreier)

    sp = sub.add_parser("bounds", help="exact bound evaluation for (q, k, d)")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--large-char", action="store_true")
    sp.add_argument("--gl-m", type=int, default=None,
                    help="also evaluate the projective estimate at this m")
    sp.add_argument("--gl-s", type=int, default=0)
    sp.add_argument("--csm-m", type=int, default=None,
                    help="also evaluate the Betti-sum bound at this m")
    _add_common(sp)
    sp.set_defaults(handler=cmd_bounds)

    sp = sub.add_parser("thresholds", help="nonexistence theorem condition checker")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--epsilon", required=True, help="rational in (0,1), e.g. 1/2")
    sp.add_argument("--large-char", action="store_true")
    sp.add_argument("--char-p", type=int, default=None,
                    help="characteristic (required with --large-char)")
    _add_common(sp)
    sp.set_defaults(handler=cmd_thresholds)

    sp = sub.add_parser("equivalence-sweep",
                        help="brute force vs witness search over all q^d top polynomials")
    _add_field(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(handler=cmd_equivalence_sweep)

    return parser


def _params_json(args):
    skip = {"handler", "command"}
    out = {}
    for key, val in vars(args).items():
        if key in skip or val is None:
            continue
        if isinstance(val, Fraction):
            val = str(val)
        out[key] = val
    return out


def _emit_csv(rows):
    buf = io.StringIO()
    if rows:
        fields = sorted(rows[0].keys())
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    try:
        result, rows, exit_code = args.handler(args)
    except _GUARD_ERRORS as exc:
        print(f"guard tripped: {exc}", file=sys.stderr)
        return 3
    except (DeepholeError, ValueError, ZeroDivisionError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        _emit_csv(rows)
        return exit_code
    timing = 0 if args.deterministic else int((time.monotonic() - t0) * 1000)
    envelope = {"command": args.command, "params": _params_json(args),
                "result": result, "timing_ms": timing, "version": __version__}
    print(json.dumps(envelope, sort_keys=True, separators=(",", ":")))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
