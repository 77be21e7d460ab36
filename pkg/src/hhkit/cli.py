"""Command-line front end: coefficients, single-instance verification, sweeps,
counterexample search, reduction adjudication, and special-function evaluation.

Exit codes: 0 success, 1 mathematical findings or evaluation failure
(violations, certification failures, oracle-level reduction mismatches),
2 usage errors.  All floats are printed with 15 significant digits; JSON and
CSV are the stable output contracts, text is human-oriented.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import bounds, harness
from .bounds import Interval, lemma_residual, verify_bound, verify_hh_double, verify_II1
from .errors import (
    CertificationError,
    ConvergenceError,
    DomainError,
    ParameterError,
    ToleranceNotMetError,
)
from .functions import FunctionSpec, SMParams
from .harness import SCHEMA_VERSION, SweepConfig, _fmt15, _quantize
from .specfun import Hyp2F1Args, beta, hyp2f1_euler, hyp2f1_series, ln_gamma

__all__ = ["main", "build_parser", "dispatch"]

_FORMATS = ("json", "csv", "text")
_THEOREMS = ("HH", "HarmHH", "II1", "Lemma", "I1", "I2", "FS1", "FS2", "II2", "II3", "II4")
_COEFF_SETS = ("lambda", "mu", "c", "rho", "nu")
_FAMILIES = ("pow", "spiece", "recip", "affine", "exp")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhkit",
        description="Verify Hermite-Hadamard type bounds for harmonically (s,m)-convex functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=_FORMATS, default="text")

    p = sub.add_parser("coeffs", help="closed-form coefficients with quadrature oracles")
    p.add_argument("--set", required=True, choices=_COEFF_SETS, dest="coeff_set")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--q", type=float, default=None)
    add_format(p)

    p = sub.add_parser("verify", help="verify one theorem instance")
    p.add_argument("--theorem", required=True, choices=_THEOREMS)
    p.add_argument("--family", required=True, choices=_FAMILIES)
    p.add_argument("--coeff", type=float, default=1.0, help="pow: coefficient")
    p.add_argument("--exp", type=float, default=2.0, help="pow: exponent")
    p.add_argument("--shift", type=float, default=0.0, help="pow: additive shift")
    p.add_argument("--slope", type=float, default=1.0, help="affine: slope")
    p.add_argument("--intercept", type=float, default=0.0, help="affine: intercept")
    p.add_argument("--scale", type=float, default=1.0, help="exp: exponent scale")
    p.add_argument("--a0", type=float, default=1.0, help="spiece: value at 0")
    p.add_argument("--b0", type=float, default=1.0, help="spiece: power coefficient")
    p.add_argument("--c0", type=float, default=0.0, help="spiece: additive constant")
    p.add_argument("--sexp", type=float, default=None, help="spiece: power (defaults to --s)")
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--q", type=float, default=1.0)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--grid", type=int, default=64, help="certification grid density")
    add_format(p)

    p = sub.add_parser("sweep", help="run a verification sweep from a JSON config")
    p.add_argument("--config", required=True, help="path to a SweepConfig JSON document")
    p.add_argument("--json", dest="json_out", default="sweep_report.json")
    p.add_argument("--csv", dest="csv_out", default="sweep_report.csv")
    add_format(p)

    p = sub.add_parser("search", help="randomized counterexample search")
    p.add_argument("--theorem", required=True, choices=[t for t in _THEOREMS if t != "Lemma"])
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)

    p = sub.add_parser("specfun", help="evaluate the special functions")
    p.add_argument("--fn", required=True, choices=("2f1", "2f1-series", "beta", "lngamma"))
    p.add_argument("--a", type=float, default=None, help="2f1: a parameter")
    p.add_argument("--b", type=float, default=None, help="2f1: b parameter")
    p.add_argument("--c", type=float, default=None, help="2f1: c parameter")
    p.add_argument("--z", type=float, default=None, help="2f1: argument in [0, 1)")
    p.add_argument("--x", type=float, default=None, help="beta/lngamma first argument")
    p.add_argument("--y", type=float, default=None, help="beta second argument")
    add_format(p)

    p = sub.add_parser("reductions", help="reduction-identity and closed-form adjudication")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--s-grid", type=float, nargs="+", default=[0.25, 0.5, 0.75, 1.0])
    p.add_argument("--q-grid", type=float, nargs="+", default=[1.5, 2.0, 3.0])
    add_format(p)

    return parser


def _emit_json(doc: dict) -> str:
    return json.dumps(_quantize({"schema_version": SCHEMA_VERSION, **doc}), indent=2, sort_keys=True) + "\n"


def _csv_lines(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt15(v) for v in row])
    return buf.getvalue()


def _interval(args) -> Interval:
    if not 0.0 < args.a < args.b:
        raise ParameterError(f"--a/--b must satisfy 0 < a < b, got a={args.a}, b={args.b}")
    return Interval(args.a, args.b)


def _build_function(args, m: float, iv: Interval) -> FunctionSpec:
    pad = 1e-6
    lo = m * iv.a * (1.0 - pad)
    hi = iv.b / m * (1.0 + pad)
    if args.family == "pow":
        return FunctionSpec.power(args.coeff, args.exp, args.shift, lo, hi)
    if args.family == "spiece":
        sexp = args.s if args.sexp is None else args.sexp
        return FunctionSpec.spiece(args.a0, args.b0, args.c0, sexp, lo, hi)
    if args.family == "recip":
        return FunctionSpec.reciprocal(lo, hi)
    if args.family == "affine":
        return FunctionSpec.affine(args.slope, args.intercept, lo, hi)
    return FunctionSpec.exponential(args.scale, lo, hi)


def _cmd_coeffs(args) -> tuple[int, str]:
    iv = _interval(args)
    name = args.coeff_set
    if name == "lambda":
        cs = bounds.coeff_lambda(iv)
    elif name == "mu":
        if args.q is None:
            raise ParameterError("--q is required for --set mu (range: q > 1)")
        cs = bounds.coeff_mu(args.q, iv)
    elif name == "c":
        if args.s is None:
            raise ParameterError("--s is required for --set c (range: 0 < s <= 1)")
        cs = bounds.coeff_C(args.s, iv)
    elif name == "rho":
        if args.s is None or args.q is None:
            raise ParameterError("--s and --q are required for --set rho (s in [0,1], q >= 1)")
        cs = bounds.coeff_rho(args.s, args.q, iv)
    else:
        if args.s is None or args.q is None:
            raise ParameterError("--s and --q are required for --set nu (s in [0,1], q > 1)")
        cs = bounds.coeff_nu(args.s, args.q, iv)

    doc = {"a": iv.a, "b": iv.b, "s": args.s, "q": args.q, **cs.to_dict()}
    if args.format == "json":
        return 0, _emit_json(doc)
    rows = [[lab, v, o, abs(v - o)] for lab, v, o in zip(cs.labels, cs.values, cs.oracle_values)]
    if args.format == "csv":
        return 0, _csv_lines(["label", "printed", "oracle", "deviation"], rows)
    lines = [f"{lab}: printed={_fmt15(v)} oracle={_fmt15(o)} |dev|={_fmt15(abs(v - o))}" for lab, v, o in
             zip(cs.labels, cs.values, cs.oracle_values)]
    lines.append(f"max_abs_dev={_fmt15(cs.max_abs_dev)}")
    return 0, "\n".join(lines) + "\n"


def _cmd_verify(args) -> tuple[int, str]:
    iv = _interval(args)
    params = SMParams(args.s, args.m, args.q)
    f = _build_function(args, params.m, iv)

    if args.theorem == "Lemma":
        residual = lemma_residual(f, iv)
        ok = residual <= bounds.TOL_ACCEPT
        doc = {"theorem": "Lemma", "a": iv.a, "b": iv.b, "family": f.label,
               "residual": residual, "tolerance": bounds.TOL_ACCEPT, "satisfied": ok}
        code = 0 if ok else 1
        if args.format == "json":
            return code, _emit_json(doc)
        if args.format == "csv":
            return code, _csv_lines(["theorem", "a", "b", "family", "residual", "satisfied"],
                                    [["Lemma", iv.a, iv.b, f.label, residual, ok]])
        return code, f"residual={_fmt15(residual)} {'satisfied' if ok else 'VIOLATED'}\n"

    if args.theorem in ("HH", "HarmHH"):
        rec = verify_hh_double(f, iv, harmonic=(args.theorem == "HarmHH"), grid=args.grid)
    elif args.theorem == "II1":
        rec = verify_II1(f, params, iv, grid=args.grid)
    else:
        rec = verify_bound(args.theorem, f, params, iv, grid=args.grid)

    code = 0 if rec.satisfied else 1
    if args.format == "json":
        return code, _emit_json(rec.to_dict())
    if args.format == "csv":
        row = rec.to_dict()
        return code, _csv_lines(list(harness.CSV_FIELDS), [[row[k] for k in harness.CSV_FIELDS]])
    verdict = "satisfied" if rec.satisfied else "VIOLATED"
    return code, f"lhs={_fmt15(rec.lhs)} rhs={_fmt15(rec.rhs)} margin={_fmt15(rec.margin)} {verdict}\n"


def _cmd_sweep(args) -> tuple[int, str]:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = SweepConfig.from_json(fh.read())
    result = harness.run_sweep(cfg)
    harness.write_report_json(result, args.json_out)
    harness.write_report_csv(result, args.csv_out)
    bad = [f for f in result.findings if f.kind in ("BoundViolation", "EvaluationError")]
    code = 1 if bad else 0
    if args.format == "json":
        return code, _emit_json({"summary": result.summary, "json_report": args.json_out,
                                 "csv_report": args.csv_out})
    if args.format == "csv":
        return code, harness.render_report_csv(result)
    s = result.summary
    lines = [
        f"instances={s['instances_evaluated']} skipped={s['instances_skipped']} "
        f"violations={s['violations']} findings={s['findings']}",
        f"worst_margin={_fmt15(s['worst_margin'])} mean_margin={_fmt15(s['mean_margin'])}",
        f"reports: {args.json_out} {args.csv_out}",
    ]
    return code, "\n".join(lines) + "\n"


def _cmd_search(args) -> tuple[int, str]:
    finding = harness.search_counterexample(args.theorem, args.budget, args.seed)
    if finding is None:
        doc = {"theorem": args.theorem, "budget": args.budget, "seed": args.seed, "finding": None}
        if args.format == "json":
            return 0, _emit_json(doc)
        if args.format == "csv":
            return 0, _csv_lines(["theorem", "budget", "seed", "finding"], [[args.theorem, args.budget, args.seed, ""]])
        return 0, f"no counterexample found ({args.theorem}, budget {args.budget}, seed {args.seed})\n"
    doc = {"theorem": args.theorem, "budget": args.budget, "seed": args.seed, "finding": finding.to_dict()}
    if args.format == "json":
        return 1, _emit_json(doc)
    if args.format == "csv":
        return 1, _csv_lines(["kind", "severity", "description"], [[finding.kind, finding.severity, finding.description]])
    return 1, finding.description + "\n"


def _cmd_specfun(args) -> tuple[int, str]:
    def need(names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise ParameterError(f"--fn {args.fn} requires {', '.join('--' + n for n in missing)}")

    if args.fn in ("2f1", "2f1-series"):
        need(["a", "b", "c", "z"])
        h = Hyp2F1Args(args.a, args.b, args.c, args.z)
        value = hyp2f1_euler(h) if args.fn == "2f1" else hyp2f1_series(h)
    elif args.fn == "beta":
        need(["x", "y"])
        value = beta(args.x, args.y)
    else:
        need(["x"])
        value = ln_gamma(args.x)

    if args.format == "json":
        return 0, _emit_json({"fn": args.fn, "value": value})
    if args.format == "csv":
        return 0, _csv_lines(["fn", "value"], [[args.fn, value]])
    return 0, _fmt15(value) + "\n"


def _cmd_reductions(args) -> tuple[int, str]:
    iv = _interval(args)
    report = harness.build_adjudication_report([iv], tuple(args.s_grid), tuple(args.q_grid))
    oracle_failures = [f for f in report["findings"]
                       if f["kind"] == "ReductionMismatch" and f["payload"].get("level") == "oracle"]
    code = 1 if oracle_failures else 0
    if args.format == "json":
        return code, _emit_json(report)
    if args.format == "csv":
        rows = [[f["kind"], f["severity"], f["description"]] for f in report["findings"]]
        return code, _csv_lines(["kind", "severity", "description"], rows)
    lines = [
        f"oracle chain: {'FAILED' if oracle_failures else 'OK'} "
        f"(tolerance {_fmt15(report['oracle_chain_tol'])})",
        f"printed-form findings: {len(report['findings'])}",
    ]
    for f in report["findings"]:
        lines.append(f"[{f['kind']}] severity={_fmt15(f['severity'])}: {f['description']}")
    return code, "\n".join(lines) + "\n"


_COMMANDS = {
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "search": _cmd_search,
    "specfun": _cmd_specfun,
    "reductions": _cmd_reductions,
}


def dispatch(args: argparse.Namespace) -> tuple[int, str]:
    """Validate flags, run the subcommand, and return (exit code, document)."""
    return _COMMANDS[args.command](args)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, document = dispatch(args)
    except (DomainError, ParameterError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return 1
    except (ToleranceNotMetError, ConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(document)
    return code


if __name__ == "__main__":
    sys.exit(main())
