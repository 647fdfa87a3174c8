"""Command-line interface.

Four subcommands: ``count`` (closed-form counts, optionally checked
against brute force), ``expected`` (mean second-row length), ``series``
(coefficient dumps of the truncated generating functions), ``verify``
(the full cross-check harness), and ``table`` (CSV export of the
cumulative sequences).

Exit codes: 0 success, 1 contract violation, 2 verification
disagreement, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence, Union

from svtab import formulas, verify
from svtab.genfun import (expected_downsteps_series, gf_skew, gf_straight)

DEFAULT_ORDER_CAP = 24

Count = Union[int, Fraction]


class ContractViolation(Exception):
    """A flag combination or value outside a command's stated domain."""


def _order_cap() -> int:
    raw = os.environ.get("SVT_MAX_ORDER")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        return int(raw)
    except ValueError:
        raise ContractViolation(
            f"SVT_MAX_ORDER must be an integer, got {raw!r}")


def _plain(value: Count) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def _json_count(value: Count) -> str:
    v = Fraction(value)
    return f"{v.numerator}/{v.denominator}"


def _fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# count

def _count_value(args) -> tuple[Count, dict]:
    refined = [v is not None for v in (args.c, args.d, args.e)]
    if any(refined) and not all(refined):
        raise ContractViolation("refined counting needs all of --c --d --e")
    refined_on = all(refined)
    if refined_on and args.m is not None:
        raise ContractViolation("--m cannot be combined with --c/--d/--e")
    if args.family == "straight":
        if args.f is not None:
            raise ContractViolation("--f applies only to --family skew")
        if refined_on:
            count = formulas.count_thm1(args.n, args.t, args.c, args.d, args.e)
            params = {"n": args.n, "t": args.t,
                      "c": args.c, "d": args.d, "e": args.e}
        elif args.m is not None:
            count = formulas.count_cor3(args.n, args.t, args.m)
            params = {"n": args.n, "t": args.t, "m": args.m}
        else:
            count = formulas.count_cor4(args.n, args.t)
            params = {"n": args.n, "t": args.t}
    else:
        if args.f is None:
            raise ContractViolation("--family skew requires --f")
        if args.m is not None:
            raise ContractViolation("row refinement exists only for straight shapes")
        if refined_on:
            count = formulas.count_thm6(args.n, args.f, args.t,
                                        args.c, args.d, args.e)
        else:
            count = formulas.count_thm7(args.n, args.f, args.t)
        params = {"n": args.n, "f": args.f, "t": args.t}
        if refined_on:
            params.update({"c": args.c, "d": args.d, "e": args.e})
    return count, params


ORACLE_MAX_N = 9


def _count_oracle(args, params: dict) -> int:
    if args.n > ORACLE_MAX_N:
        raise ContractViolation(
            f"--oracle enumerates tableaux and is capped at n <= {ORACLE_MAX_N}")
    f = params.get("f", 0)
    if "c" in params:
        return verify._tableau_counter(args.n, f, args.t)[
            (args.c, args.d, args.e)]
    if "m" in params:
        from svtab import shapes
        return sum(
            shapes.count_tableaux(s, args.n, row_filter=(args.m, args.n - args.m))
            for s in verify._shape_range(args.n, 0, args.t))
    return sum(verify._tableau_shape_counts(args.n, f, args.t).values())


def _emit_count(args, count: Count, params: dict,
                oracle: Optional[int]) -> int:
    match = None if oracle is None else (count == oracle)
    if args.format == "plain":
        if oracle is None:
            print(_plain(count))
        else:
            print(f"formula: {_plain(count)}")
            print(f"oracle: {oracle}")
            print("MATCH" if match else "MISMATCH")
    elif args.format == "json":
        payload = dict(params)
        payload["count"] = _json_count(count)
        if oracle is not None:
            payload["oracle"] = _json_count(oracle)
            payload["match"] = match
        print(json.dumps(payload))
    else:
        keys = list(params)
        header = keys + ["count"]
        row = [str(params[k]) for k in keys] + [_plain(count)]
        if oracle is not None:
            header += ["oracle", "match"]
            row += [str(oracle), str(match)]
        print(",".join(header))
        print(",".join(row))
    if match is False:
        return 2
    return 0


def _cmd_count(args) -> int:
    try:
        count, params = _count_value(args)
    except ValueError as exc:
        raise ContractViolation(str(exc))
    oracle = _count_oracle(args, params) if args.oracle else None
    return _emit_count(args, count, params, oracle)


# ---------------------------------------------------------------------------
# expected

def _cmd_expected(args) -> int:
    if args.n < 2:
        raise ContractViolation("expected value needs n >= 2")
    try:
        value = formulas.expected_thm5(args.n, args.t)
    except ValueError as exc:
        raise ContractViolation(str(exc))
    if value is None:
        print("no tableaux for these parameters", file=sys.stderr)
        return 1
    print(_fraction(value))
    return 0


# ---------------------------------------------------------------------------
# series

def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ContractViolation(f"not a rational number: {text!r}")


def _cmd_series(args) -> int:
    cap = _order_cap()
    if args.order < 0:
        raise ContractViolation("--order must be nonnegative")
    if args.order > cap:
        raise ContractViolation(
            f"--order {args.order} exceeds the configured maximum {cap}")
    if args.family == "skew":
        if args.f is None or args.f < 1:
            raise ContractViolation("--family skew requires --f >= 1")
    elif args.f is not None:
        raise ContractViolation("--f applies only to --family skew")

    values = [None if v is None else _parse_rational(v)
              for v in (args.x, args.y, args.alpha)]
    given = [v for v in values if v is not None]
    ints_only = all(v.denominator == 1 for v in given)
    if given and not ints_only and len(given) != 3:
        raise ContractViolation(
            "non-integer specialization needs all of --x --y --alpha")

    def build(x_val, y_val, alpha_val):
        if args.family == "straight":
            return gf_straight(args.t, args.order, x_val=x_val,
                               y_val=y_val, alpha_val=alpha_val)
        return gf_skew(args.f, args.t, args.order, x_val=x_val,
                       y_val=y_val, alpha_val=alpha_val)

    try:
        if ints_only:
            x_val, y_val, alpha_val = [
                None if v is None else int(v) for v in values]
            series = build(x_val, y_val, alpha_val)
            print(series.dump())
        else:
            series = build(None, None, None)
            for i, value in enumerate(series.specialize(*values)):
                print(f"{i}: {_plain(value)}")
    except ArithmeticError as exc:
        print(f"error: series build failed: {exc}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# verify

def _cmd_verify(args) -> int:
    if args.max_n < 0:
        raise ContractViolation("--max-n must be nonnegative")
    out = verify.run_all(args.max_n)
    summary = out["summary"]
    if args.report is not None:
        payload = {
            "summary": summary,
            "reports": [r.to_json_dict() for r in out["reports"]],
        }
        try:
            with open(args.report, "w") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"error: cannot write report {args.report}: {exc}",
                  file=sys.stderr)
            return 3
    counts = summary["counts"]
    print(f"checks: {summary['total']}")
    print(f"agree: {counts['agree']}")
    print(f"disagree: {counts['disagree']} "
          f"({len(summary['documented_disagreements'])} documented, "
          f"{len(summary['undocumented_disagreements'])} undocumented)")
    print(f"formula-domain-excluded: {counts['formula-domain-excluded']}")
    print(f"builder-error: {counts['builder-error']}")
    for entry in summary["undocumented_disagreements"]:
        print(f"UNDOCUMENTED {entry['check']} {entry['params']}")
    return 0 if summary["ok"] else 2


# ---------------------------------------------------------------------------
# table

def _parse_range(text: str) -> range:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            start = stop = int(parts[0])
        elif len(parts) == 2:
            start, stop = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ContractViolation(f"range must look like 2..8, got {text!r}")
    return range(start, stop + 1)


def _cmd_table(args) -> int:
    ns = _parse_range(args.n)
    if args.which == "thm7":
        if args.f is None:
            raise ContractViolation("table thm7 requires --f")
        header = f"n,count_thm7(f={args.f},t={args.t})"
        rows = [(n, formulas.count_thm7(n, args.f, args.t)) for n in ns]
    elif args.which == "cor4":
        if args.f is not None:
            raise ContractViolation("--f applies only to thm7 tables")
        header = f"n,count_cor4(t={args.t})"
        rows = [(n, formulas.count_cor4(n, args.t)) for n in ns]
    else:
        if args.f is not None:
            raise ContractViolation("--f applies only to thm7 tables")
        if ns and ns.start < 2:
            raise ContractViolation("expected-value tables need n >= 2")
        header = f"n,expected_thm5(t={args.t})"
        rows = []
        for n in ns:
            value = formulas.expected_thm5(n, args.t)
            rows.append((n, "" if value is None else value))
    print(header)
    for n, value in rows:
        text = value if isinstance(value, str) else _plain(value)
        print(f"{n},{text}")
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="svtab",
        description="Exact counts of two-rowed set-valued standard tableaux "
                    "and the matching coloured Motzkin paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts")
    p.add_argument("--family", choices=["straight", "skew"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--f", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--format", choices=["plain", "csv", "json"],
                   default="plain")
    p.add_argument("--oracle", action="store_true",
                   help="recount by brute-force tableau enumeration")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("expected", help="mean second-row length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_expected)

    p = sub.add_parser("series", help="generating-function coefficients")
    p.add_argument("--family", choices=["straight", "skew"], required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--f", type=int)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--alpha")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="run the cross-check harness")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--report", help="write the full JSON report here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="CSV export of the count sequences")
    p.add_argument("--which", choices=["cor4", "thm7", "expected"],
                   required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--f", type=int)
    p.add_argument("--n", required=True, help="inclusive range, e.g. 2..8")
    p.add_argument("--format", choices=["csv"], default="csv")
    p.set_defaults(func=_cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 3


if __name__ == "__main__":
    sys.exit(main())
