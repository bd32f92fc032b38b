"""Command-line front end: ``sqrtpoly <subcommand> ...``.

JSON is the stable machine format. Run metadata that varies between
otherwise identical invocations (wall time, thread count) lives under the
``run`` key and is omitted with ``--no-timing``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

import numpy as np

from .constructions import (
    RootTask,
    construct_3mod4,
    construct_5mod8,
    construct_tth_special,
    identity_5mod8_holds,
    verify_root_poly,
)
from .errors import ParseError, SqrtPolyError, TheoremViolation
from .field import check_modulus
from .poly import parse_coeffs
from .search import (
    bound_checks,
    equidist_stats,
    interpolant,
    kernel_residual,
    kernel_sign_search,
    min_degree_robust,
    random_y,
)
from .zero_run import (
    abc_check,
    binomial_series,
    check_binomial_consistency,
    check_exp_consistency,
    check_power_run,
    exp_series,
    two_value_classify,
)

SCHEMA = "v1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ParseError.exit_code, f"{self.prog}: error: {message}\n")


def _degree(f):
    return None if f.is_zero() else f.degree


def cmd_construct(args) -> dict:
    p = check_modulus(args.p)
    if args.variant == "3mod4":
        f, t = construct_3mod4(p), 2
    elif args.variant == "5mod8":
        f, t = construct_5mod8(p), 2
    else:
        t = args.t
        f = construct_tth_special(p, t)
    out = {
        "variant": args.variant,
        "p": p,
        "t": t,
        "coeffs": f.to_string(),
        "degree": _degree(f),
        "errors": verify_root_poly(f, RootTask(p, t)),
        "f0": f.eval_int(0),
    }
    if args.variant == "5mod8":
        out["identity_ok"] = identity_5mod8_holds(f)
    return out


def cmd_verify(args) -> dict:
    p = check_modulus(args.p)
    f = parse_coeffs(args.f, p)
    e = verify_root_poly(f, RootTask(p, args.t))
    out = {"p": p, "t": args.t, "coeffs": f.to_string(), "degree": _degree(f), "errors": e,
           "f0": f.eval_int(0)}
    out["checks"] = [] if f.is_zero() else [c.to_json() for c in bound_checks(p, args.t, e, f.degree)]
    return out


def cmd_mindeg(args) -> dict:
    report = min_degree_robust(args.p, args.e, args.t, threads=args.threads)
    out = report.to_json(timing=False)
    out.pop("schema")
    out["_ms"] = report.ms
    if not report.bound_ok:
        out["_violation"] = True
    return out


def cmd_kernel(args) -> dict:
    p = check_modulus(args.p)
    v = kernel_sign_search(p, args.t, args.strategy, args.budget, args.seed)
    out = {"p": p, "t": args.t, "strategy": args.strategy, "budget": args.budget,
           "found": v is not None, "witness": None, "degree": None, "errors": None}
    if v is not None:
        f = interpolant(v, p)
        if any(kernel_residual(v, p, args.t)):
            raise TheoremViolation("returned vector is not in the kernel")
        out.update(witness=str(v), degree=_degree(f), errors=verify_root_poly(f, RootTask(p, 2)))
    return out


def cmd_zerorun(args) -> dict:
    p = check_modulus(args.p)
    f = parse_coeffs(args.f, p)
    report = check_power_run(f, args.t_pow, p, strict=False)
    out = {"coeffs": f.to_string(), **report.to_json()}
    if report.hypothesis_ok and report.b is not None:
        out["abc"] = abc_check(*report.triple()).to_json()
    if not report.hypothesis_ok:
        out["_exit"] = 2
    return out


def _parse_rationals(text: str) -> list[Fraction]:
    if not text or not text.strip():
        raise ParseError("empty coefficient list")
    try:
        return [Fraction(v.strip()) for v in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational list {text!r}: {exc}") from exc


def cmd_series(args) -> dict:
    f = _parse_rationals(args.f)
    d = max(len(f) - 1, 0)
    while d and f[d] == 0:
        d -= 1
    if args.kind == "exp":
        h = exp_series(f, args.N)
        ok = check_exp_consistency(f, h)
    else:
        h = binomial_series(f, args.r, args.s, args.N)
        ok = check_binomial_consistency(f, args.r, args.s, h)
    run = h.zero_runs(d)
    return {"kind": args.kind, "r": args.r, "s": args.s, "N": h.order, "coeffs": h.to_text(),
            "consistent": ok, **run.to_json()}


def cmd_abc(args) -> dict:
    p = check_modulus(args.p)
    a, b, c = (parse_coeffs(x, p) for x in (args.a, args.b, args.c))
    return {"p": p, **abc_check(a, b, c).to_json()}


def cmd_classify(args) -> dict:
    p = check_modulus(args.p)
    f, C = parse_coeffs(args.f, p), parse_coeffs(args.C, p)
    return {"p": p, "m": args.m, "alternative": two_value_classify(f, C, args.m, p)}


def cmd_equidist(args) -> dict:
    p = check_modulus(args.p)
    rng = np.random.default_rng(args.seed)
    runs = [equidist_stats(p, args.t, random_y(p, args.t, rng), args.buckets) for _ in range(args.trials)]
    passed = sum(r.within_bound for r in runs)
    return {"p": p, "t": args.t, "buckets": args.buckets, "trials": args.trials,
            "within_bound": passed, "fraction": passed / args.trials,
            "runs": [r.to_json() for r in runs]}


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "mindeg": cmd_mindeg,
    "kernel": cmd_kernel,
    "zerorun": cmd_zerorun,
    "series": cmd_series,
    "abc": cmd_abc,
    "classify": cmd_classify,
    "equidist": cmd_equidist,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--no-timing", action="store_true", help="omit the run block")

    parser = _Parser(prog="sqrtpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("construct", parents=[common], help="explicit root polynomials")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--variant", choices=("3mod4", "5mod8", "tth"), required=True)
    sp.add_argument("-t", type=int, default=3)

    sp = sub.add_parser("verify", parents=[common], help="count errors of a polynomial")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-f", "--f", required=True, help="coefficients, JSON array or @file")
    sp.add_argument("-t", type=int, default=2)

    sp = sub.add_parser("mindeg", parents=[common], help="exhaustive minimum degree")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-e", type=int, default=0)
    sp.add_argument("-t", type=int, default=2)

    sp = sub.add_parser("kernel", parents=[common], help="sign vectors killing leading coefficients")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-t", type=int, default=1, help="number of leading coefficients")
    sp.add_argument("--strategy", choices=("exhaustive", "meet-in-middle", "random"), default="exhaustive")
    sp.add_argument("--budget", type=int, default=int(os.environ.get("SQRTPOLY_KERNEL_BUDGET", 1 << 22)))

    sp = sub.add_parser("zerorun", parents=[common], help="zero runs in f^t over F_p")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-f", "--f", required=True)
    sp.add_argument("--t-pow", type=int, required=True)

    sp = sub.add_parser("series", parents=[common], help="exact f^(r/s) or exp(f) series")
    sp.add_argument("-f", "--f", required=True, help="rational coefficients, e.g. 1,1/2")
    sp.add_argument("--kind", choices=("binomial", "exp"), default="binomial")
    sp.add_argument("-r", type=int, default=1)
    sp.add_argument("-s", type=int, default=2)
    sp.add_argument("-N", type=int, default=None)

    sp = sub.add_parser("abc", parents=[common], help="Mason-Stothers check for a + b = c")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--c", required=True)

    sp = sub.add_parser("classify", parents=[common], help="two-value alternative on a subgroup")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-f", "--f", required=True)
    sp.add_argument("-C", "--C", required=True)
    sp.add_argument("-m", type=int, required=True)

    sp = sub.add_parser("equidist", parents=[common], help="value distribution of P_y(g^j)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-t", type=int, default=1)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--buckets", type=int, default=10)
    return parser


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload)
    scalars = {k: v for k, v in payload.items() if not isinstance(v, (list, dict))}
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(scalars), lineterminator="\n")
        writer.writeheader()
        writer.writerow(scalars)
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"{k}: {v}" for k, v in payload.items())


def run(argv=None) -> tuple[int, str]:
    """Parse, dispatch and render; returns (exit code, output text)."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        body = COMMANDS[args.command](args)
    except SqrtPolyError as exc:
        payload = {"schema": SCHEMA, "command": args.command, "seed": args.seed, "error": type(exc).__name__,
                   "message": str(exc)}
        return exc.exit_code, _render(payload, args.format)
    ms = body.pop("_ms", (time.perf_counter() - start) * 1000)
    code = 5 if body.pop("_violation", False) else body.pop("_exit", 0)
    payload = {"schema": SCHEMA, "command": args.command, "seed": args.seed, **body}
    if not args.no_timing:
        payload["run"] = {"threads": args.threads, "ms": round(ms, 3)}
    return code, _render(payload, args.format)


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code == 0 else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
