"""Command-line interface: count orbits for one group, cross-verify the
counting methods over a range of groups, or tabulate counts for many groups.

Exit codes: 0 success; 1 verification found a disagreement or reference
mismatch; 2 malformed input (group spec, flags, or ESC_BUDGET); 3 workload
over budget; 4 the requested methods disagree with each other.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict, dataclass

from .abelian import GroupParseError, parse_group
from .budget import Budget, BudgetExceededError, budget_from_env
from .burnside import orbit_count_congruence, orbit_count_naive
from .closed_form import closed_count
from .verify import abelian_groups_of_order, check_reference_values, sweep

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_BUDGET = 3
EXIT_DISAGREEMENT = 4

_COUNT_METHODS = {
    "closed": closed_count,
    "congruence": orbit_count_congruence,
    "naive": orbit_count_naive,
}


@dataclass
class OutputRecord:
    """One computed count; `count` is a decimal string to keep full precision
    in every output format."""

    group: str
    n: int
    method: str
    count: str
    elapsed_ms: int


def _emit_text(records: list[OutputRecord], out) -> None:
    headers = ("group", "n", "method", "count", "elapsed_ms")
    table = [headers] + [
        (r.group, str(r.n), r.method, r.count, str(r.elapsed_ms)) for r in records
    ]
    widths = [max(len(row[col]) for row in table) for col in range(len(headers))]
    for row in table:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip(), file=out)


def _emit_csv(records: list[OutputRecord], out) -> None:
    writer = csv.writer(out)
    writer.writerow(["group", "n", "method", "count", "elapsed_ms"])
    for r in records:
        writer.writerow([r.group, r.n, r.method, r.count, r.elapsed_ms])


def _emit_json(records: list[OutputRecord], out) -> None:
    json.dump([asdict(r) for r in records], out, indent=2)
    out.write("\n")


_EMITTERS = {"text": _emit_text, "csv": _emit_csv, "json": _emit_json}


def _emit(records: list[OutputRecord], fmt: str, out) -> None:
    _EMITTERS[fmt](records, out)


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="escount",
        description=(
            "Count isomorphism classes of element systems with characters "
            "over finite abelian groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count orbits for one group")
    count.add_argument("--group", required=True, help="group spec, e.g. C12 or C2^2xC9")
    count.add_argument("--n", required=True, type=_positive_int, help="tuple length")
    count.add_argument(
        "--method",
        choices=["closed", "congruence", "naive", "all"],
        default="closed",
        help="counting method (all = run every method and compare)",
    )
    count.add_argument("--format", choices=sorted(_EMITTERS), default="text")

    verify = sub.add_parser("verify", help="cross-check methods over small groups")
    verify.add_argument("--max-order", type=_positive_int, default=16)
    verify.add_argument("--max-n", type=_positive_int, default=2)
    verify.add_argument("--format", choices=sorted(_EMITTERS), default="text")

    table = sub.add_parser("table", help="tabulate counts for several groups")
    which = table.add_mutually_exclusive_group(required=True)
    which.add_argument("--groups", help="comma-separated group specs")
    which.add_argument(
        "--all-orders", type=_positive_int, help="all abelian groups of order <= K"
    )
    table.add_argument("--n", required=True, type=_positive_int, help="tuple length")
    table.add_argument("--format", choices=sorted(_EMITTERS), default="text")

    return parser


def _timed_record(group, n: int, method: str, fn, budget: Budget) -> OutputRecord:
    start = time.perf_counter()
    value = fn(group, n, budget)
    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    return OutputRecord(str(group), n, method, str(value), elapsed_ms)


def cmd_count(args, budget: Budget) -> int:
    try:
        group = parse_group(args.group)
    except GroupParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    names = list(_COUNT_METHODS) if args.method == "all" else [args.method]
    records = []
    for name in names:
        try:
            records.append(_timed_record(group, args.n, name, _COUNT_METHODS[name], budget))
        except BudgetExceededError as exc:
            print(f"skipped {name}: {exc}", file=sys.stderr)
    if not records:
        print("error: no method fit within the budget", file=sys.stderr)
        return EXIT_BUDGET
    _emit(records, args.format, sys.stdout)
    if len({r.count for r in records}) > 1:
        print("error: methods disagree", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_verify(args, budget: Budget) -> int:
    report = sweep(args.max_order, args.max_n, budget)
    references = check_reference_values(budget)
    mismatches = [row for row in references if not row.match]
    ok = report.ok and not mismatches

    if args.format == "json":
        payload = {
            "cases": [
                {
                    "group": c.group,
                    "n": c.n,
                    "values": {k: str(v) for k, v in c.values.items()},
                    "skipped": c.skipped,
                    "agree": c.agree,
                    "elapsed_ms": c.elapsed_ms,
                }
                for c in report.cases
            ],
            "references": [
                {
                    "label": r.label,
                    "group": r.group,
                    "n": r.n,
                    "expected": str(r.expected),
                    "computed": {k: str(v) for k, v in r.computed.items()},
                    "match": r.match,
                }
                for r in references
            ],
            "disagreements": len(report.disagreements),
            "mismatches": len(mismatches),
            "ok": ok,
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        records = [
            OutputRecord(c.group, c.n, method, str(value), c.elapsed_ms.get(method, 0))
            for c in report.cases
            for method, value in c.values.items()
        ]
        _emit(records, args.format, sys.stdout)
        if args.format == "text":
            for case in report.cases:
                for method, reason in case.skipped.items():
                    print(f"skipped {case.group} n={case.n} {method}: {reason}")
            for case in report.disagreements:
                print(f"DISAGREE {case.group} n={case.n}: {case.values}")
            for row in references:
                status = "ok" if row.match else "MISMATCH"
                print(
                    f"reference {row.label} {row.group} n={row.n} "
                    f"expected={row.expected} computed={row.computed} {status}"
                )
            print(
                f"cases: {len(report.cases)}  disagreements: {len(report.disagreements)}  "
                f"references: {len(references)}  mismatches: {len(mismatches)}"
            )
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_table(args, budget: Budget) -> int:
    if args.groups is not None:
        try:
            groups = [parse_group(spec) for spec in args.groups.split(",")]
        except GroupParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE_ERROR
    else:
        groups = [
            group
            for order in range(1, args.all_orders + 1)
            for group in abelian_groups_of_order(order)
        ]
    records = []
    for group in groups:
        try:
            records.append(_timed_record(group, args.n, "closed", closed_count, budget))
        except BudgetExceededError as exc:
            print(f"error: {group}: {exc}", file=sys.stderr)
            return EXIT_BUDGET
    _emit(records, args.format, sys.stdout)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        budget = budget_from_env()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    if args.command == "count":
        return cmd_count(args, budget)
    if args.command == "verify":
        return cmd_verify(args, budget)
    return cmd_table(args, budget)


if __name__ == "__main__":
    sys.exit(main())
