"""Command line front end.

Exit codes: 0 success, 2 input error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Sequence

from .scalar import ScalarError, format_decimal, format_scalar, is_one, parse_scalar
from .semigroup import CoprimePair, frobenius_number, gap_set
from .special import apostol_bernoulli, bernoulli, euler_at_zero
from .sums import (
    DEFAULT_ORACLE_CAP,
    METHODS,
    MethodDisagreement,
    OracleCapExceeded,
    auto_method,
    run_method,
    sylvester_sum,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3

DEFAULT_LAMBDAS = "2,1/2,-1,-5/3,5,sqrt(2),1+sqrt(2)"

# options whose value may start with "-" (e.g. -5/3, -sqrt(2))
_SIGNED_VALUE_OPTIONS = ("--lambda", "--lambdas")


class InputError(Exception):
    pass


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, ensure_ascii=False))
    else:
        print(text)


def _pair(a: int, b: int) -> CoprimePair:
    if a < 1 or b < 1:
        raise InputError(f"a and b must be positive integers, got {a} and {b}")
    if gcd(a, b) != 1:
        raise InputError(f"a={a} and b={b} are not coprime (gcd {gcd(a, b)})")
    return CoprimePair(a, b)


def _lambda(text: str):
    try:
        return parse_scalar(text)
    except ScalarError as exc:
        raise InputError(str(exc)) from None


def _lambda_list(text: str) -> list:
    return [_lambda(t) for t in text.split(",") if t.strip()]


def cmd_gaps(args) -> int:
    pair = _pair(args.a, args.b)
    gaps = gap_set(pair).gaps
    record = {
        "command": "gaps",
        "a": pair.a,
        "b": pair.b,
        "gaps": list(gaps),
        "count": len(gaps),
        "frobenius": frobenius_number(pair),
    }
    text = "\n".join([
        "gaps: " + (" ".join(map(str, gaps)) if gaps else "(none)"),
        f"count: {len(gaps)}",
        f"frobenius: {frobenius_number(pair)}",
    ])
    _emit(record, args.json, text)
    return EXIT_OK


def cmd_sum(args) -> int:
    pair = _pair(args.a, args.b)
    lam = _lambda(args.lam)
    if not lam:
        raise InputError("lambda must be nonzero")
    if args.m < 0:
        raise InputError("m must be nonnegative")
    result = sylvester_sum(pair, args.m, lam, method=args.method, cap=args.oracle_cap)
    record = {
        "command": "sum",
        "a": pair.a,
        "b": pair.b,
        "m": args.m,
        "lambda": format_scalar(lam),
        "value": format_scalar(result.value),
        "method_used": result.method_used,
        "elapsed_microseconds": round(result.elapsed * 1e6),
        "cross_checked": result.cross_checked,
    }
    text = record["value"]
    if args.decimal is not None:
        record["decimal"] = format_decimal(result.value, args.decimal)
        text += f"\n~ {record['decimal']} (approximate)"
    _emit(record, args.json, text)
    return EXIT_OK


def cmd_apostol(args) -> int:
    lam = _lambda(args.lam)
    if is_one(lam):
        raise InputError(
            "lambda = 1 is not allowed: the explicit Apostol-Bernoulli formula "
            "divides by lambda - 1, and B_n(1) is not the classical B_n"
        )
    if args.n < 0:
        raise InputError("n must be nonnegative")
    values = [format_scalar(v) for v in apostol_bernoulli(args.n, lam)]
    record = {"command": "apostol", "lambda": format_scalar(lam), "values": values}
    _emit(record, args.json, "\n".join(f"{n}: {v}" for n, v in enumerate(values)))
    return EXIT_OK


def cmd_bernoulli(args) -> int:
    if args.n < 0:
        raise InputError("n must be nonnegative")
    table = euler_at_zero(args.n) if args.euler else bernoulli(args.n)
    values = [format_scalar(v) for v in table]
    record = {"command": "bernoulli", "kind": "euler_at_zero" if args.euler else "bernoulli",
              "values": values}
    _emit(record, args.json, "\n".join(f"{n}: {v}" for n, v in enumerate(values)))
    return EXIT_OK


def _verify_cell(cell: tuple[int, int, int, str, int]) -> list[tuple[str, bool, str]]:
    """Check one (a, b, m, lambda) cell; returns (family, ok, detail) rows."""
    a, b, m, lam_text, cap = cell
    lam = parse_scalar(lam_text)
    rows: list[tuple[str, bool, str]] = []
    where = f"(a, b, m, lambda) = ({a}, {b}, {m}, {lam_text})"
    try:
        res = sylvester_sum((a, b), m, lam, method="all", cap=cap)
        rows.append(("equivalence", True, ""))
    except MethodDisagreement as exc:
        shown = ", ".join(f"{k}={format_scalar(v)}" for k, v in exc.values.items())
        rows.append(("equivalence", False, f"{where}: {shown}"))
        return rows
    value = res.value
    if m == 1 and "theorem1" in res.values:
        ok = res.values["theorem1"] == res.values["theorem_m"]
        rows.append(("reduction", ok, "" if ok else f"{where}: theorem_m != theorem1"))
    swapped = run_method(auto_method((b, a), m, lam), (b, a), m, lam, cap)
    ok = swapped == value
    rows.append(("symmetry", ok, "" if ok else
                 f"{where}: swapped pair gives {format_scalar(swapped)}"))
    if is_one(lam) and m <= 2:
        ok = res.values["derivative"] == res.values["classical_lambda1"]
        rows.append(("lambda1_classical", ok, "" if ok else f"{where}: derivative != classical"))
    return rows


def cmd_verify(args) -> int:
    if min(args.amax, args.bmax) < 1 or args.mmax < 0 or args.jobs < 1:
        raise InputError("bounds must be positive")
    lambdas = _lambda_list(args.lambdas)
    if not lambdas or any(not lam for lam in lambdas):
        raise InputError("lambdas must be a nonempty list of nonzero scalars")
    cells = [
        (a, b, m, format_scalar(lam), args.oracle_cap)
        for a in range(2, args.amax + 1)
        for b in range(a + 1, args.bmax + 1)
        if gcd(a, b) == 1
        for lam in lambdas
        for m in range(args.mmax + 1)
    ]
    start = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_cell, cells, chunksize=64))
    else:
        results = [_verify_cell(c) for c in cells]
    families: dict[str, list[int]] = {}
    failures: list[str] = []
    for rows in results:
        for family, ok, detail in rows:
            counts = families.setdefault(family, [0, 0])
            counts[0 if ok else 1] += 1
            if not ok:
                failures.append(f"{family}: {detail}")
    elapsed = time.perf_counter() - start
    passed = not failures
    record = {
        "command": "verify",
        "cells": len(cells),
        "families": {k: {"passed": v[0], "failed": v[1]} for k, v in families.items()},
        "failures": failures,
        "elapsed_seconds": round(elapsed, 3),
        "passed": passed,
    }
    lines = [f"{k}: {'PASS' if v[1] == 0 else 'FAIL'} ({v[0]} ok, {v[1]} failed)"
             for k, v in families.items()]
    lines += failures
    lines.append(f"{'PASS' if passed else 'FAIL'}: {len(cells)} cells in {elapsed:.1f} s")
    _emit(record, args.json, "\n".join(lines))
    return EXIT_OK if passed else EXIT_VERIFY


def _parse_pairs(text: str) -> list[CoprimePair]:
    pairs = []
    for item in text.split(","):
        item = item.strip()
        try:
            a, b = (int(t) for t in item.lower().split("x"))
        except ValueError:
            raise InputError(f"bad pair {item!r}; expected AxB") from None
        pairs.append(_pair(a, b))
    return pairs


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def cmd_bench(args) -> int:
    pairs = _parse_pairs(args.pairs)
    lam = _lambda(args.lam)
    if not lam:
        raise InputError("lambda must be nonzero")
    rows = []
    for pair in pairs:
        closed = auto_method(pair, args.m, lam)
        if closed == "derivative":
            closed = "classical_lambda1" if is_one(lam) and args.m <= 2 else "theorem_m"
        timings: dict[str, float | None] = {}
        values = {}
        for name in (closed, "derivative", "oracle"):
            if name == "oracle" and pair.a * pair.b > args.oracle_cap:
                timings[name] = None
                continue
            values[name], timings[name] = _timed(
                lambda: run_method(name, pair, args.m, lam, args.oracle_cap))
        if len(set(values.values())) != 1:
            raise MethodDisagreement(values, (pair.a, pair.b, args.m, format_scalar(lam)))
        rows.append({
            "a": pair.a,
            "b": pair.b,
            "m": args.m,
            "lambda": format_scalar(lam),
            "closed_method": closed,
            "closed_seconds": timings[closed],
            "derivative_seconds": timings["derivative"],
            "oracle_seconds": timings["oracle"],
        })
    fmt = lambda t: "skipped" if t is None else f"{t:.6f}"  # noqa: E731
    lines = [f"{'pair':>12} {'closed':>12} {'derivative':>12} {'oracle':>12}  closed method"]
    for r in rows:
        lines.append(f"{r['a']}x{r['b']:<6} {fmt(r['closed_seconds']):>12} "
                     f"{fmt(r['derivative_seconds']):>12} {fmt(r['oracle_seconds']):>12}  "
                     f"{r['closed_method']}")
    _emit(rows, args.json, "\n".join(lines))
    return EXIT_OK


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for arg in it:
        if arg in _SIGNED_VALUE_OPTIONS:
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")
    common.add_argument("--oracle-cap", type=int, default=argparse.SUPPRESS, metavar="N",
                        help=f"largest ab summed by brute force (default {DEFAULT_ORACLE_CAP})")

    parser = argparse.ArgumentParser(
        prog="sylvester", parents=[common],
        description="Exact weighted Sylvester sums over two-generator semigroup gaps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gaps", parents=[common], help="list the gap set")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("sum", parents=[common], help="weighted sum of n^m lambda^(n-1) over gaps")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--method", default="auto", choices=("auto", "all") + METHODS)
    p.add_argument("--decimal", type=int, metavar="N",
                   help="also print an approximation rounded to N decimals")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("apostol", parents=[common], help="Apostol-Bernoulli numbers 0..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_apostol)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli numbers 0..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--euler", action="store_true", help="print E_n(0) instead")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("verify", parents=[common], help="cross-validate all methods on a sweep")
    p.add_argument("--amax", type=int, default=25)
    p.add_argument("--bmax", type=int, default=25)
    p.add_argument("--mmax", type=int, default=6)
    p.add_argument("--lambdas", default=DEFAULT_LAMBDAS)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time closed form vs derivative vs oracle")
    p.add_argument("--pairs", default="101x103,1009x1013")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--lambda", dest="lam", default="1/2")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(sys.argv[1:] if argv is None else argv))
    args.json = getattr(args, "json", False)
    args.oracle_cap = getattr(args, "oracle_cap", DEFAULT_ORACLE_CAP)
    try:
        return args.func(args)
    except MethodDisagreement as exc:
        if args.json:
            print(json.dumps({
                "command": args.command,
                "error": "methods disagree",
                "request": list(exc.request),
                "values": {k: format_scalar(v) for k, v in exc.values.items()},
            }))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (InputError, ValueError, OracleCapExceeded, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
