"""Command-line entry points.

Exit status: 0 on success, 1 on user error (syntax or an ill-typed term),
2 on an internal invariant violation.
"""

from __future__ import annotations

import argparse
import random
import sys

from .generate import DEPTH_CAP, enumerate_terms, random_term
from .preservation import preserve
from .semantics import FuelExhaustedError, drive_step, trace
from .sexpr import parse_derivation, render_derivation
from .surface import ParseError, parse, render
from .sweeps import driver_sweep, oracle_sweep, preservation_sweep, trace_sweep
from .typecheck import infer, validate_typing

USER_ERROR = 1
INTERNAL_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fraglang", description="modular language workbench"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="infer a type and its derivation")
    check.add_argument("expr")

    evaluate = sub.add_parser("eval", help="drive an expression to normal form")
    evaluate.add_argument("expr")
    evaluate.add_argument("--trace", action="store_true")
    evaluate.add_argument("--fuel", type=int, default=64)

    preserve_cmd = sub.add_parser(
        "preserve", help="type, step once, and rewrite the typing derivation"
    )
    preserve_cmd.add_argument("expr")

    diff = sub.add_parser("oracle-diff", help="compare against the monolithic twin")
    diff.add_argument("--depth", type=int, default=1)

    selftest = sub.add_parser("selftest", help="run the property sweeps")
    selftest.add_argument("--depth", type=int, default=1)

    return parser


def _parse_expr(text: str) -> "Term | None":
    try:
        return parse(text)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return None


def _cmd_check(args: argparse.Namespace) -> int:
    term = _parse_expr(args.expr)
    if term is None:
        return USER_ERROR
    result = infer(term)
    if result is None:
        print("ill-typed")
        return USER_ERROR
    ty, derivation = result
    print(ty.value)
    print(render_derivation(derivation))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    term = _parse_expr(args.expr)
    if term is None:
        return USER_ERROR
    try:
        steps = trace(term, args.fuel)
    except FuelExhaustedError as exc:
        print(f"fuel exhausted: {exc}", file=sys.stderr)
        return USER_ERROR
    if args.trace:
        for target, derivation in steps:
            print(f"--> {render(target)}    {render_derivation(derivation)}")
    final = steps[-1][0] if steps else term
    print(render(final))
    return 0


def _cmd_preserve(args: argparse.Namespace) -> int:
    term = _parse_expr(args.expr)
    if term is None:
        return USER_ERROR
    typed = infer(term)
    if typed is None:
        print("ill-typed")
        return USER_ERROR
    ty, wt = typed
    stepped = drive_step(term)
    if stepped is None:
        print("normal form: nothing to preserve", file=sys.stderr)
        return USER_ERROR
    target, step = stepped
    wt_after = preserve(step, wt)
    print(render_derivation(wt))
    print(render_derivation(step))
    print(render_derivation(wt_after))
    if not validate_typing(wt_after, target, ty):
        print("internal error: rewritten derivation does not validate", file=sys.stderr)
        return INTERNAL_ERROR
    return 0


def _depth_ok(depth: int) -> bool:
    if depth > DEPTH_CAP:
        print(f"depth {depth} exceeds the cap of {DEPTH_CAP}", file=sys.stderr)
        return False
    return True


def _cmd_oracle_diff(args: argparse.Namespace) -> int:
    if not _depth_ok(args.depth):
        return USER_ERROR
    # stream: the depth-2 population runs to millions of terms
    report = oracle_sweep(enumerate_terms(args.depth))
    print(report.line())
    return 0 if report.ok else INTERNAL_ERROR


def _cmd_selftest(args: argparse.Namespace) -> int:
    if not _depth_ok(args.depth):
        return USER_ERROR
    reports = [
        driver_sweep(enumerate_terms(args.depth)),
        preservation_sweep(enumerate_terms(args.depth)),
        oracle_sweep(enumerate_terms(args.depth)),
        trace_sweep(enumerate_terms(args.depth)),
        _round_trip_sweep(),
    ]
    for report in reports:
        print(report.line())
    return 0 if all(r.ok for r in reports) else INTERNAL_ERROR


def _round_trip_sweep():
    from .sweeps import SweepReport

    report = SweepReport("round-trips")
    rng = random.Random(20240601)
    for _ in range(500):
        report.checked += 1
        report.exercised += 1
        t = random_term(rng, rng.randrange(8))
        if parse(render(t)) != t:
            report.blame(t, "surface round trip failed")
            continue
        typed = infer(t)
        if typed is not None:
            wt = typed[1]
            if parse_derivation(render_derivation(wt)) != wt:
                report.blame(t, "typing derivation round trip failed")
    return report


_COMMANDS = {
    "check": _cmd_check,
    "eval": _cmd_eval,
    "preserve": _cmd_preserve,
    "oracle-diff": _cmd_oracle_diff,
    "selftest": _cmd_selftest,
}


def main(argv: "list[str] | None" = None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
