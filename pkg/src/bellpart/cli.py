"""Command-line interface: ``bellpart {pn,table,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 domain/cap error, 64 usage error.
Data goes to stdout, diagnostics to stderr.
"""

import argparse
import csv
import json
import os
import statistics
import sys
import time

from . import invariants, partition
from .errors import CapExceededError, ExactnessError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

FIELDS = ("n", "method", "value", "elapsed_ns", "ok")



class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _positive(text):
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _methods(text):
    items = [m.strip() for m in text.split(",") if m.strip()]
    if not items:
        raise argparse.ArgumentTypeError("at least one method required")
    bad = [m for m in items if m not in partition.METHODS]
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown method(s) {', '.join(bad)}; choose from {', '.join(partition.METHODS)}"
        )
    # deterministic output order regardless of how they were listed
    return [m for m in partition.METHODS if m in items]


def _env_override():
    v = os.environ.get("BELLPART_CAP_OVERRIDE", "").strip().lower()
    return v not in ("", "0", "false", "no")


def record(report):
    return {
        "n": report.n,
        "method": report.method,
        "value": str(report.value),
        "elapsed_ns": report.elapsed_ns,
        "ok": report.agrees_with_oracle,
    }


def write_records(records, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(FIELDS)
        for rec in records:
            w.writerow([rec["n"], rec["method"], rec["value"], rec["elapsed_ns"],
                        "true" if rec["ok"] else "false"])
    else:
        for rec in records:
            out.write(f"{rec['n']}\t{rec['method']}\t{rec['value']}\t"
                      f"{rec['elapsed_ns']}\t{'ok' if rec['ok'] else 'MISMATCH'}\n")


def build_parser():
    parser = _Parser(prog="bellpart", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unsafe-cap", action="store_true",
                        help="lift the theta/naive/definition caps")
    common.add_argument("--algo", choices=("rec", "nested"), default="rec",
                        help="Bell evaluator used by the bell method")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pn = sub.add_parser("pn", parents=[common], help="print p(n) by one method")
    pn.add_argument("--n", type=_nonneg, required=True)
    pn.add_argument("--method", choices=partition.METHODS, default="bell")
    pn.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    table = sub.add_parser("table", parents=[common], help="p(0..max) checked against the oracle")
    table.add_argument("--max", type=_nonneg, required=True, dest="max_n")
    table.add_argument("--methods", type=_methods, default=list(partition.METHODS[:1]))
    table.add_argument("--format", choices=("plain", "json", "csv"), default="csv")

    verify = sub.add_parser("verify", help="run the invariant suite")
    verify.add_argument("--max", type=_nonneg, default=30, dest="max_n")

    bench = sub.add_parser("bench", parents=[common], help="median timings per (method, n)")
    bench.add_argument("--max", type=_nonneg, required=True, dest="max_n")
    bench.add_argument("--methods", type=_methods, default=["euler", "bell"])
    bench.add_argument("--repeats", type=_positive, default=3)
    bench.add_argument("--format", choices=("plain", "json", "csv"), default="csv")
    return parser


def cmd_pn(args):
    report = partition.timed_report(args.n, args.method, unsafe=args.unsafe, algo=args.algo)
    if args.format == "plain":
        print(report.value)
    else:
        write_records([record(report)], args.format)
    return EXIT_OK if report.agrees_with_oracle else EXIT_FAIL


def cmd_table(args):
    oracle = partition.partition_numbers(args.max_n)
    records = []
    for n in range(args.max_n + 1):
        for method in args.methods:
            records.append(record(partition.timed_report(
                n, method, unsafe=args.unsafe, algo=args.algo, oracle=oracle[n])))
    write_records(records, args.format)
    return EXIT_OK if all(r["ok"] for r in records) else EXIT_FAIL


def cmd_verify(args):
    failed = 0
    for outcome in invariants.run_all(args.max_n):
        status = "PASS" if outcome.passed else "FAIL"
        line = f"{outcome.name}\t{status}"
        if outcome.detail:
            line += f"\t{outcome.detail}"
        print(line)
        failed += not outcome.passed
    print(f"# {len(invariants.CHECKS) - failed}/{len(invariants.CHECKS)} invariants passed",
          file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args):
    oracle = partition.partition_numbers(args.max_n)
    records = []
    for n in range(args.max_n + 1):
        for method in args.methods:
            times = []
            for _ in range(args.repeats):
                partition.clear_caches()
                start = time.perf_counter_ns()
                value = partition.compute(n, method, unsafe=args.unsafe, algo=args.algo)
                times.append(time.perf_counter_ns() - start)
            records.append({"n": n, "method": method, "value": str(value),
                            "elapsed_ns": int(statistics.median(times)),
                            "ok": value == oracle[n]})
    write_records(records, args.format)
    return EXIT_OK


COMMANDS = {"pn": cmd_pn, "table": cmd_table, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.unsafe = getattr(args, "unsafe_cap", False) or _env_override()
    if args.unsafe and args.command != "verify":
        print("warning: oracle caps lifted; exponential methods may run for a long time",
              file=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ExactnessError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
