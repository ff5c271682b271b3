"""Command-line front end.

Commands: bernoulli, stirling, bell, verify, bench.  Every command accepts
--format {plain,json,csv}.  Exit codes: 0 success, 2 verification mismatch,
64 usage error.

JSON value records follow {"n": int, "method": str, "value": "p/q"}; values
are always exact "p"/"p/q" strings so nothing passes through floating
point, and documents re-render byte-identically after a parse.  CSV emits
unquoted fields (every field is sign/digits/slash/letters only).

The environment variable BERNSTIR_MAX_N caps any requested index (default
10000) so a typo cannot start a runaway job.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Iterable, Sequence

from .bell import bell_partition_sum, bell_recurrence
from .bernoulli import Method, bernoulli, method_domain, supports
from .exact import format_rational, parse_rational
from .stirling import StirlingTable
from .verify import cross_verify

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_USAGE = 64

DEFAULT_CAP = 10000
FORMATS = ("plain", "json", "csv")
METHOD_NAMES = tuple(m.value for m in Method)


class UsageError(Exception):
    """Invalid invocation; reported on stderr with exit code 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures to exit 64
        raise UsageError(message)


def _cap() -> int:
    raw = os.environ.get("BERNSTIR_MAX_N", "").strip()
    if not raw:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError("BERNSTIR_MAX_N must be an integer, got %r" % raw) from None


def _check_cap(value: int, name: str) -> None:
    cap = _cap()
    if value > cap:
        raise UsageError(
            "%s=%d exceeds the BERNSTIR_MAX_N cap of %d" % (name, value, cap)
        )


def render_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def render_csv(header: str, rows: Iterable[Sequence]) -> str:
    lines = [header]
    lines.extend(",".join(str(field) for field in row) for row in rows)
    return "\n".join(lines) + "\n"


def _parse_method(name: str) -> Method:
    try:
        return Method(name)
    except ValueError:
        raise UsageError(
            "unknown method %r; choose from: %s or all" % (name, ", ".join(METHOD_NAMES))
        ) from None


def cmd_bernoulli(args: argparse.Namespace) -> tuple[str, int]:
    n = args.n
    if n < 0:
        raise UsageError("n must be >= 0, got %d" % n)
    _check_cap(n, "n")
    if args.method == "all":
        table = StirlingTable(2 * n)
        records = []
        for method in sorted(Method, key=lambda m: m.value):
            if supports(method, n):
                value = format_rational(bernoulli(n, method, table=table))
            else:
                value = "unsupported"
            records.append({"n": n, "method": method.value, "value": value})
    else:
        method = _parse_method(args.method)
        if not supports(method, n):
            raise UsageError(
                "method '%s' is defined for %s only; methods defined at n=%d: %s"
                % (
                    method.value,
                    method_domain(method),
                    n,
                    ", ".join(m.value for m in Method if supports(m, n)),
                )
            )
        records = [
            {"n": n, "method": method.value, "value": format_rational(bernoulli(n, method))}
        ]
    if args.format == "json":
        return render_json(records), EXIT_OK
    if args.format == "csv":
        return (
            render_csv("n,method,value", [(r["n"], r["method"], r["value"]) for r in records]),
            EXIT_OK,
        )
    if len(records) == 1:
        return records[0]["value"] + "\n", EXIT_OK
    return "".join("%s %s\n" % (r["method"], r["value"]) for r in records), EXIT_OK


def cmd_stirling(args: argparse.Namespace) -> tuple[str, int]:
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0, got %d" % args.max_n)
    _check_cap(args.max_n, "max-n")
    table = StirlingTable(args.max_n)
    if args.format == "json":
        records = [{"n": n, "k": k, "value": str(v)} for n, k, v in table]
        return render_json(records), EXIT_OK
    if args.format == "csv":
        return render_csv("n,k,value", table), EXIT_OK
    return "".join("%d %d %d\n" % (n, k, v) for n, k, v in table), EXIT_OK


def cmd_bell(args: argparse.Namespace) -> tuple[str, int]:
    n, k = args.n, args.k
    if not n >= k >= 1:
        raise UsageError("bell needs n >= k >= 1, got (%d, %d)" % (n, k))
    _check_cap(n, "n")
    try:
        xs = [parse_rational(token) for token in args.args.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(xs) < n - k + 1:
        raise UsageError(
            "B_{%d,%d} needs %d arguments x_1..x_%d, got %d"
            % (n, k, n - k + 1, n - k + 1, len(xs))
        )
    evaluate = bell_partition_sum if args.evaluator == "partition-sum" else bell_recurrence
    value = format_rational(evaluate(n, k, xs))
    if args.format == "json":
        return render_json([{"n": n, "k": k, "value": value}]), EXIT_OK
    if args.format == "csv":
        return render_csv("n,k,value", [(n, k, value)]), EXIT_OK
    return value + "\n", EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1, got %d" % args.max_n)
    _check_cap(args.max_n, "max-n")
    known = ("alternating",) if args.allow_known else ()
    report = cross_verify(args.max_n, known)
    code = EXIT_OK if report.ok else EXIT_MISMATCH
    if args.format == "json":
        return report.to_json(), code
    if args.format == "csv":
        rows = [
            (e.n, e.method, format_rational(e.value), "yes" if e.agrees_with_oracle else "no")
            for e in report.entries
        ]
        return render_csv("n,method,value,agrees", rows), code
    return report.to_table(), code


def cmd_bench(args: argparse.Namespace) -> tuple[str, int]:
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2, got %d" % args.max_n)
    _check_cap(args.max_n, "max-n")
    methods = sorted(Method, key=lambda m: m.value)
    if args.methods:
        wanted = [_parse_method(name.strip()) for name in args.methods.split(",")]
        methods = [m for m in methods if m in wanted]
        if not methods:
            raise UsageError("no methods selected")
    flagged = {
        _parse_method(name.strip()).value
        for name in args.known.split(",")
        if name.strip()
    }
    records = []
    mismatched = False
    for n in range(args.max_n + 1):
        expected = None
        for method in methods:
            if not supports(method, n):
                continue
            start = time.perf_counter_ns()
            value = bernoulli(n, method)  # fresh tables: standalone method cost
            micros = (time.perf_counter_ns() - start) // 1000
            records.append(
                {
                    "n": n,
                    "method": method.value,
                    "value": format_rational(value),
                    "micros": micros,
                }
            )
            if method.value in flagged:
                continue
            if expected is None:
                expected = value
            elif value != expected:
                mismatched = True
    code = EXIT_MISMATCH if mismatched else EXIT_OK
    if args.format == "json":
        return render_json(records), code
    if args.format == "csv":
        rows = [(r["n"], r["method"], r["value"], r["micros"]) for r in records]
        return render_csv("n,method,value,micros", rows), code
    return (
        "".join(
            "%d %s %s %dus\n" % (r["n"], r["method"], r["value"], r["micros"])
            for r in records
        ),
        code,
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="bernstir", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("bernoulli", help="compute B_n by one method or all")
    p.add_argument("n", type=int)
    p.add_argument("--method", default="all", metavar="NAME",
                   help="one of %s, or all" % (", ".join(METHOD_NAMES)))
    add_format(p)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("stirling", help="dump the S(n, k) triangle")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    add_format(p)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("bell", help="evaluate B_{n,k}(x_1, ..., x_{n-k+1})")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--args", required=True,
                   help="comma-separated rationals, e.g. 1/2,1/3,1/4")
    p.add_argument("--evaluator", choices=("recurrence", "partition-sum"),
                   default="recurrence")
    add_format(p)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("verify", help="cross-verify all methods against the oracle")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--allow-known", action="store_true",
                   help="do not fail on the documented 'alternating' discrepancy")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time every method per index")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--methods", default="",
                   help="comma-separated subset of methods (default: all)")
    p.add_argument("--known", default="alternating",
                   help="methods exempt from the value consistency gate")
    add_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
