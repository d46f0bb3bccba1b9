"""Command-line front end.

    primality test <expr> [--algo A] [--rounds K] [--seed S]
    primality bench --suite NAME [--algos a,b] [--reps N] [--seed S] [--include-slow] [--out FILE]
    primality sieve --limit N

Exit status: 0 prime / probable prime (or bench success), 1 composite,
2 inapplicable or error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from .arith import sieve
from .bench import (
    ALGORITHMS,
    SUITES,
    BenchmarkMismatch,
    dispatch_target,
    emit_csv,
    get_suites,
    run_suite,
    write_csv_files,
)
from .forms import detect_form, parse_number
from .verdict import TestConfig

EXIT_PRIME, EXIT_COMPOSITE, EXIT_ERROR = 0, 1, 2


def _show(n: int) -> str:
    text = str(n)
    return text if len(text) <= 60 else f"{text[:25]}...{text[-25:]} ({len(text)} digits)"


def cli_test(expr: str, algo: str = "auto", rounds: int = 20, seed: int = 0, out=None, err=None) -> int:
    """Run one test on ``expr`` and print the verdict; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        n = parse_number(expr)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    if algo not in ALGORITHMS:
        print(f"error: unknown algorithm {algo!r}", file=err)
        return EXIT_ERROR
    cfg = TestConfig(rounds, seed)
    start = time.perf_counter_ns()
    verdict = ALGORITHMS[algo](n, cfg)
    elapsed = time.perf_counter_ns() - start

    used = dispatch_target(n) if algo == "auto" else algo
    print(f"n: {_show(n)}", file=out)
    print(f"form: {detect_form(n)}", file=out)
    print(f"algorithm: {used}", file=out)
    print(f"verdict: {verdict.tag}", file=out)
    if verdict.witness is not None:
        print(f"witness: {_show(verdict.witness)}", file=out)
    if verdict.error_bound is not None:
        print(f"error bound: {verdict.error_bound}", file=out)
    print(f"elapsed: {elapsed / 1e6:.3f} ms", file=out)
    if verdict.is_inapplicable:
        print(f"inapplicable: {verdict.reason}", file=err)
        return EXIT_ERROR
    return EXIT_COMPOSITE if verdict.is_composite else EXIT_PRIME


def _bench(args) -> int:
    algos = args.algos.split(",") if args.algos else None
    records = []
    try:
        for suite in get_suites(args.suite):
            records += run_suite(
                suite,
                algos,
                repetitions=args.reps,
                seed=args.seed,
                rounds=args.rounds,
                include_slow=args.include_slow,
            )
    except (BenchmarkMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        side = write_csv_files(records, args.out)
        print(f"wrote {len(records)} records to {args.out} and {side}", file=sys.stderr)
    else:
        emit_csv(records, sys.stdout, sys.stderr)
    return EXIT_PRIME


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primality", description="Primality tests and benchmarks.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log skipped benchmark pairs")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", help="test one number")
    t.add_argument("expr", help="N, 2^E-1, 2^E+1 or K*2^E+1")
    t.add_argument("--algo", default="auto", choices=list(ALGORITHMS))
    t.add_argument("--rounds", type=int, default=20)
    t.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("bench", help="time algorithms on a built-in corpus")
    b.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    b.add_argument("--algos", help="comma-separated algorithm ids (default: the suite's own)")
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--rounds", type=int, default=20)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--include-slow", action="store_true", help="run trial division and AKS above 64 bits")
    b.add_argument("--out", help="CSV file; the summary goes next to it as .summary.csv")

    s = sub.add_parser("sieve", help="list primes up to a limit")
    s.add_argument("--limit", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "test":
        if args.rounds < 1:
            print("error: --rounds must be >= 1", file=sys.stderr)
            return EXIT_ERROR
        return cli_test(args.expr, args.algo, args.rounds, args.seed)
    if args.command == "bench":
        return _bench(args)
    print(" ".join(map(str, sieve(args.limit))))
    return EXIT_PRIME


if __name__ == "__main__":
    sys.exit(main())
