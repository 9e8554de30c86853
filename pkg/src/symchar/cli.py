"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from symchar.evaluator import (
    DEFAULT_TABLE_BOUND,
    MemoStore,
    SizeMismatchError,
    TableBoundError,
    character_table,
    mn_value,
)
from symchar.identities import CHECKS, REPORT_FIELDS, Report, make_family, sweep, verify
from symchar.partitions import PartitionError, format_partition, parse_partition

CACHE_ENV = "SYMCHAR_CACHE"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise UsageError(str(exc)) from exc


def _csv_text(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_value(args, store: MemoStore, out) -> int:
    lam = _partition_arg(args.lambda_)
    mu = _partition_arg(args.mu)
    try:
        value = mn_value(lam, mu, store=store)
    except SizeMismatchError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        record = {"lambda": format_partition(lam), "mu": format_partition(mu), "value": value}
        out.write(json.dumps(record) + "\n")
    elif args.format == "csv":
        out.write(_csv_text([["lambda", "mu", "value"], [format_partition(lam), format_partition(mu), value]]))
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_table(args, store: MemoStore, out) -> int:
    try:
        table = character_table(args.n, bound=args.bound, store=store, workers=args.workers)
    except (TableBoundError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    labels = [format_partition(p) for p in table.partitions]
    if args.format == "json":
        out.write(json.dumps(table.to_dict()) + "\n")
    elif args.format == "csv":
        rows = [[""] + labels]
        rows += [[label] + row for label, row in zip(labels, table.values)]
        out.write(_csv_text(rows))
    else:
        shown = [repr(p) for p in table.partitions]
        width = max([len(s) for s in shown] + [len(str(v)) for row in table.values for v in row])
        out.write(" " * width + " " + " ".join(s.rjust(width) for s in shown) + "\n")
        for label, row in zip(shown, table.values):
            out.write(label.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row) + "\n")
    return EXIT_OK


def _write_report(report: Report, fmt: str, out) -> None:
    if fmt == "json":
        out.write(report.to_json() + "\n")
    elif fmt == "csv":
        out.write(report.to_csv())
    else:
        for row in report.rows:
            j = "-" if row.j is None else row.j
            status = "ok" if row.equal else "FAIL"
            out.write(f"{row.check:6} alpha={row.alpha!r} t={row.t} n={row.n} j={j}: {row.lhs} {'==' if row.equal else '!='} {row.rhs}  {status}\n")
        out.write(("PASS" if report.passed else "FAIL") + f" ({len(report.rows)} checks, {len(report.failures)} failures)\n")


def _which(value: str) -> tuple[str, ...]:
    return CHECKS if value == "all" else (value,)


def cmd_verify(args, store: MemoStore, out) -> int:
    alpha = _partition_arg(args.alpha)
    try:
        fam = make_family(alpha, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = verify(fam, _which(args.which), store=store)
    _write_report(report, args.format, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sweep(args, store: MemoStore, out) -> int:
    try:
        summary = sweep(args.max_n, args.max_t, _which(args.which), store=store, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        out.write(json.dumps(summary.as_dict()) + "\n")
    elif args.format == "csv":
        rows = [list(REPORT_FIELDS)]
        rows += [[rec[k] if rec[k] is not None else "" for k in REPORT_FIELDS] for rec in (r.as_record() for r in summary.failures)]
        out.write(_csv_text(rows))
    else:
        out.write(f"instances: {summary.instances}\nchecks: {summary.checks}\nfailures: {len(summary.failures)}\n")
        for row in summary.failures:
            out.write(f"  {row.check} alpha={row.alpha!r} t={row.t} j={row.j}: {row.lhs} != {row.rhs}\n")
    return EXIT_OK if summary.passed else EXIT_FAIL


def cmd_cache_info(args, store: MemoStore, out) -> int:
    info = {"path": args.cache, "records": len(store), "skipped": args.skipped}
    if args.format == "json":
        out.write(json.dumps(info) + "\n")
    elif args.format == "csv":
        out.write(_csv_text([list(info), [info["path"] or "", info["records"], info["skipped"]]]))
    else:
        if args.cache is None:
            out.write(f"no cache configured (use --cache or ${CACHE_ENV})\n")
        else:
            out.write(f"cache: {args.cache}\nrecords: {len(store)}\nskipped lines: {args.skipped}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cache", default=os.environ.get(CACHE_ENV), help=f"value cache file (default ${CACHE_ENV})")

    parser = argparse.ArgumentParser(prog="symchar", description="Exact symmetric group characters and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", parents=[common], help="a single character value chi^lambda(mu)")
    p.add_argument("--lambda", dest="lambda_", required=True, metavar="PARTITION")
    p.add_argument("--mu", required=True, metavar="PARTITION")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("table", parents=[common], help="full character table of S_n")
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, default=DEFAULT_TABLE_BOUND)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="check the identities for one family (alpha, t)")
    p.add_argument("--alpha", required=True, metavar="PARTITION", help='odd parts only; "" for the empty partition')
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--which", choices=CHECKS + ("all",), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="check every family up to the given bounds")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-t", type=int, required=True)
    p.add_argument("--which", choices=CHECKS + ("all",), default="all")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("cache-info", parents=[common], help="show the configured value cache")
    p.set_defaults(func=cmd_cache_info)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    store = MemoStore()
    args.skipped = 0
    if args.cache:
        args.skipped = store.load(args.cache)
        if args.skipped:
            err.write(f"warning: skipped {args.skipped} corrupt cache lines\n")
    try:
        code = args.func(args, store, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    if args.cache and args.command != "cache-info":
        store.save(args.cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
