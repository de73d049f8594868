"""Command-line front end.

Subcommands
-----------
rank     run the elimination on one matrix and print the revealed rank plus
         certificate outcomes
compare  run elimination + SVD oracle over many matrices, write the CSV
         report and print the bucket tables
verify   run a verification battery (lemmas / bounds / examples)

Matrix sources are either a Matrix Market file path or a generator spec:
``peters:M``, ``example1``, ``example2:D``, ``random:M,N,R,GAP,SEED``.

Exit codes: 0 success, 1 input/parse error, 2 numerical breakdown,
3 iteration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import bounds, lemmas, suites
from .engine import IterationLimitError, NumericalBreakdownError, rank_reveal
from .generators import (example_block, gen_example_local_not_normal,
                         gen_example_normal_not_local, gen_peters,
                         gen_random_rank_deficient)
from .io import (MatrixMarketFormatError, MatrixMarketParseError, ReportRow,
                 read_matrix_market, write_csv_report)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_BREAKDOWN = 2
EXIT_ITERATION_CAP = 3


class InputSpecError(ValueError):
    pass


def load_matrix(spec):
    """Resolve a matrix source spec to (name, matrix)."""
    if spec.endswith(".mtx"):
        return spec, read_matrix_market(spec)
    name, _, args = spec.partition(":")
    try:
        if name == "peters":
            return spec, gen_peters(int(args))
        if name == "example1":
            if args:
                raise InputSpecError("example1 takes no arguments")
            return spec, gen_example_normal_not_local()
        if name == "example2":
            return spec, gen_example_local_not_normal(float(args) if args else 0.99)
        if name == "random":
            m, n, r, gap, seed = args.split(",")
            return spec, gen_random_rank_deficient(
                int(m), int(n), int(r), float(gap), int(seed))
    except (ValueError, TypeError) as exc:
        raise InputSpecError(f"bad matrix spec {spec!r}: {exc}") from exc
    raise InputSpecError(
        f"unknown matrix source {spec!r} (expected a .mtx path or "
        "peters:M | example1 | example2:D | random:M,N,R,GAP,SEED)")


def _canonical_block(spec, result):
    """Block reported by --check-local/--check-normal: the block discussed in
    the literature for the built-in examples, the engine's block otherwise."""
    base = spec.partition(":")[0]
    if base in ("example1", "example2"):
        return example_block(base)
    return result.row_indices, result.col_indices


def _report_row(name, a, rho, beta):
    t0 = time.perf_counter()
    result = rank_reveal(a, rho=rho, beta=beta)
    cert_beta = bounds.verify_betabound(a, result)
    cert_thm = bounds.verify_theorem_bounds(a, result)
    comp = bounds.compare_with_svd(a, result)
    elapsed = (time.perf_counter() - t0) * 1000.0
    full = result.rank == min(a.shape)
    return ReportRow(
        name=name, m=a.shape[0], n=a.shape[1], rho=rho, beta=result.beta,
        rank_rrge=result.rank, rank_svd=comp.rank_svd, pivots=result.pivot_count,
        pivot_ratio=comp.pivot_ratio if np.isfinite(comp.pivot_ratio) else None,
        sigma_min_a11=cert_thm.sigma_min_a11,
        sigma_r=cert_thm.sigma_r,
        sigma_r_ratio=comp.sigma_ratio,
        ratio_fig1_r=None if full else comp.ratio_r,
        ratio_fig1_r1=None if full else comp.ratio_r1,
        schur_norm_c=cert_beta.schur_norm_c,
        betabound_pass=cert_beta.passed,
        theorem_pass=cert_thm.passed,
        elapsed_ms=elapsed,
    ), comp


def cmd_rank(args):
    name, a = load_matrix(args.matrix)
    result = rank_reveal(a, rho=args.rho, beta=args.beta)
    cert_beta = bounds.verify_betabound(a, result)
    cert_thm = bounds.verify_theorem_bounds(a, result)
    print(f"matrix: {name} ({a.shape[0]}x{a.shape[1]})")
    print(f"rank: {result.rank}")
    print(f"rows: {[int(i) for i in result.row_indices]}")
    print(f"cols: {[int(j) for j in result.col_indices]}")
    print(f"pivots: {result.pivot_count}")
    print(f"beta: {result.beta:.17g}")
    print(f"betabound certificate: {'pass' if cert_beta.passed else 'FAIL'}")
    print(f"theorem certificate: {'pass' if cert_thm.passed else 'FAIL'}")
    if args.check_local or args.check_normal:
        rows, cols = _canonical_block(args.matrix, result)
        label = (f"{len(rows)}x{len(cols)} block (rows {[int(i) for i in rows]}, "
                 f"cols {[int(j) for j in cols]})")
        if args.check_local:
            has = lemmas.is_local_max_volume(a, rows, cols, args.rho)
            print(f"local max volume ({label}, rho={args.rho:g}): "
                  f"{'yes' if has else 'no'}")
        if args.check_normal:
            has = lemmas.is_normal_max_volume(a, rows, cols, args.rho)
            print(f"normal max volume ({label}, rho={args.rho:g}): "
                  f"{'yes' if has else 'no'}")
    if args.csv:
        row, _ = _report_row(name, a, args.rho, args.beta)
        write_csv_report([row], args.csv, append=True)
    return EXIT_OK


def _compare_one(task):
    name, a, rho, beta = task
    try:
        row, comp = _report_row(name, a, rho, beta)
        return row, comp, None
    except (NumericalBreakdownError, IterationLimitError) as exc:
        row = ReportRow(name=name, m=a.shape[0], n=a.shape[1], rho=rho,
                        beta=beta if beta else 0.0,
                        betabound_pass=False, theorem_pass=False)
        return row, None, exc


def cmd_compare(args):
    sources = [load_matrix(spec) for spec in args.matrices]
    tasks = [(name, a, args.rho, args.beta) for name, a in sources]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_compare_one, tasks))
    else:
        outcomes = [_compare_one(t) for t in tasks]
    rows = [row for row, _, _ in outcomes]
    write_csv_report(rows, args.csv)
    comps = [comp for _, comp, _ in outcomes if comp is not None]
    failures = [(row.name, exc) for row, _, exc in outcomes if exc is not None]

    sigma_counts = {}
    pivot_counts = {}
    for comp in comps:
        sigma_counts[comp.sigma_ratio_bucket] = sigma_counts.get(comp.sigma_ratio_bucket, 0) + 1
        pivot_counts[comp.pivot_ratio_bucket] = pivot_counts.get(comp.pivot_ratio_bucket, 0) + 1
    print(f"report: {args.csv} ({len(rows)} rows)")
    print("sigma_r(A11)/sigma_r(A) buckets:")
    for label in ("(0.1,1]", "(0.01,0.1]", "(0.001,0.01]"):
        print(f"  {label:>14s}  {sigma_counts.pop(label, 0)}")
    for label, count in sorted(sigma_counts.items()):
        print(f"  {label:>14s}  {count}")
    print("pivots/rank buckets:")
    for label in ("[1.00,1.05)", "[1.05,1.50)", "[1.50,4.00)", "[4.00,5.00)"):
        print(f"  {label:>14s}  {pivot_counts.pop(label, 0)}")
    for label, count in sorted(pivot_counts.items()):
        print(f"  {label:>14s}  {count}")
    for name, exc in failures:
        print(f"failed: {name}: {exc}")
    return EXIT_OK


def cmd_verify(args):
    if args.suite == "lemmas":
        report = suites.run_lemma_battery(trials=args.trials, seed=args.seed)
    elif args.suite == "bounds":
        report = suites.run_bounds_battery(trials=args.trials, seed=args.seed,
                                           rho=args.rho)
    elif args.suite == "examples":
        report = suites.run_examples_battery()
    else:  # pragma: no cover - argparse restricts choices
        raise InputSpecError(f"unknown suite {args.suite!r}")
    print(report.summary())
    for key, value in report.stats.items():
        print(f"  {key}: {value}")
    if report.failures:
        print(f"first failure: {report.failures[0]}")
        return 1
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rrge",
        description="Rank-revealing Gaussian elimination with max-volume pivoting")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--rho", type=float, default=2.0,
                       help="pivot threshold, >= 1 (default 2.0)")
        p.add_argument("--beta", type=float, default=None,
                       help="identity-block scale, > 0 (default: machine-precision based)")

    p_rank = sub.add_parser("rank", help="reveal the rank of one matrix")
    p_rank.add_argument("matrix", help="matrix source (.mtx path or generator spec)")
    common(p_rank)
    p_rank.add_argument("--csv", help="append a report row to this CSV file")
    p_rank.add_argument("--check-local", action="store_true",
                        help="also test the block for local max volume")
    p_rank.add_argument("--check-normal", action="store_true",
                        help="also test the block for normal max volume")

    p_cmp = sub.add_parser("compare", help="compare against the SVD oracle")
    p_cmp.add_argument("matrices", nargs="*", help="matrix sources")
    common(p_cmp)
    p_cmp.add_argument("--csv", required=True, help="output CSV path")
    p_cmp.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p_ver = sub.add_parser("verify", help="run a verification battery")
    p_ver.add_argument("--suite", choices=("lemmas", "bounds", "examples"),
                       required=True)
    p_ver.add_argument("--trials", type=int, default=200)
    p_ver.add_argument("--seed", type=int, default=1)
    p_ver.add_argument("--rho", type=float, default=2.0)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "rank":
            return cmd_rank(args)
        if args.command == "compare":
            return cmd_compare(args)
        return cmd_verify(args)
    except (InputSpecError, MatrixMarketParseError, MatrixMarketFormatError,
            FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NumericalBreakdownError as exc:
        print(f"numerical breakdown: {exc}", file=sys.stderr)
        return EXIT_BREAKDOWN
    except IterationLimitError as exc:
        print(f"iteration cap exceeded: {exc}", file=sys.stderr)
        return EXIT_ITERATION_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
