"""Command-line interface: compute, verify, search, gen.

Output is byte-deterministic for fixed inputs and flags: no timestamps,
stable column order, and identical values in the CSV and JSON emissions of
the same run.  Exit codes: 0 success (and no violations), 1 violations
found, 2 usage or input error, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .graphs import (
    ENUMERATION_CAP,
    Graph,
    complete,
    cycle,
    degree_stats,
    enumerate_graphs,
    parse_graph6,
    path,
    prism,
    star,
    subdivided_prism,
    to_graph6,
)
from .spectral import DEFAULT_TOL, SpectralConvergenceError, spectral_summary
from .bounds import bound_report
from .harness import (
    DEFAULT_CHECK_TOL,
    SEARCH_CAP,
    SearchRecord,
    ViolationReport,
    bell_max_search,
    hong_search,
    select_checks,
    verify_graphs,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_NON_CONVERGENCE = 3

REPORT_COLUMNS = (
    "graph6", "n", "m", "max_degree", "min_degree", "avg_degree", "variance",
    "rho", "q1", "epsilon", "nikiforov", "main", "cg_degree", "cgs",
    "sub_high", "sub_low", "hofmeister_lb", "ylt_lb", "hsf_ub",
    "var_lb", "var_ub",
)
SEARCH_COLUMNS = ("objective", "n", "m", "graph6", "epsilon", "degree_gap", "ties")
VIOLATION_COLUMNS = ("check", "graph6", "canonical", "lhs", "rhs", "margin", "tolerance")

GENERATORS = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "prism": prism,
    "subdivided-prism": subdivided_prism,
}


# ---------------------------------------------------------------------------
# Row assembly and emission
# ---------------------------------------------------------------------------

def report_row(g: Graph, tol: float = DEFAULT_TOL) -> dict:
    """One output row: exact integers, decimals, and every bound column."""
    s = degree_stats(g)
    summary = spectral_summary(g, tol)
    rep = bound_report(g, tol)
    return {
        "graph6": to_graph6(g),
        "n": s.n,
        "m": s.m,
        "max_degree": s.max_degree,
        "min_degree": s.min_degree,
        "avg_degree": s.avg_degree_float,
        "variance": s.variance_float,
        "rho": summary.rho,
        "q1": summary.q1,
        "epsilon": rep.epsilon,
        "nikiforov": rep.nikiforov,
        "main": rep.main,
        "cg_degree": rep.cg_degree,
        "cgs": rep.cgs,
        "sub_high": rep.sub_high,
        "sub_low": rep.sub_low,
        "hofmeister_lb": rep.hofmeister_lb,
        "ylt_lb": rep.ylt_lb,
        "hsf_ub": rep.hsf_ub,
        "var_lb": rep.var_lb,
        "var_ub": rep.var_ub,
    }


def _round_value(value, precision: str):
    # Six significant digits (round-half-even via float formatting) by
    # default; exact integers and strings are never rounded.
    if not isinstance(value, float) or precision == "full":
        return value
    return float(f"{value:.6g}")


def _rounded_rows(rows: list[dict], columns: Sequence[str], precision: str) -> list[dict]:
    return [
        {col: _round_value(row[col], precision) for col in columns}
        for row in rows
    ]


def _emit(rows: list[dict], columns: Sequence[str], fmt: str, precision: str, out) -> None:
    rows = _rounded_rows(rows, columns, precision)
    if fmt == "json":
        out.write(json.dumps(rows, indent=2))
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["NA" if row[col] is None else row[col] for col in columns])


def _write_output(rows: list[dict], columns: Sequence[str], fmt: str,
                  precision: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        _emit(rows, columns, fmt, precision, sys.stdout)
    else:
        with open(out_path, "w", encoding="ascii") as fh:
            _emit(rows, columns, fmt, precision, fh)


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _read_graph6_lines(source: str | None, inline: list[str]) -> list[tuple[int, str]]:
    """(line number, text) pairs from a file, stdin ('-'), or inline strings."""
    if inline:
        return [(i + 1, s) for i, s in enumerate(inline)]
    if source is None:
        raise ValueError("no input: pass a graph6 file, '-', or --inline")
    if source == "-":
        raw = sys.stdin.read().splitlines()
    else:
        with open(source, "r", encoding="ascii") as fh:
            raw = fh.read().splitlines()
    return [(i + 1, line) for i, line in enumerate(raw)]


def cmd_compute(args) -> int:
    try:
        lines = _read_graph6_lines(args.input, args.inline)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for lineno, text in lines:
        stripped = text.strip()
        if not stripped or stripped == ">>graph6<<":
            continue
        try:
            g = parse_graph6(stripped)
        except ValueError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            if args.strict:
                return EXIT_USAGE
            continue
        rows.append(report_row(g, args.tol))
    _write_output(rows, REPORT_COLUMNS, args.format, args.precision, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _violation_row(v: ViolationReport) -> dict:
    return {
        "check": v.check_name,
        "graph6": v.graph6,
        "canonical": v.canonical,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "margin": v.margin,
        "tolerance": v.tolerance,
    }


def _corrupted_check(ctx, tol):
    # Deliberately false inequality for the --self-test fixture: a clean
    # pipeline must flag it on every graph with positive degree variance.
    return [("self-test-corrupted", ctx.report.main * 10.0 + tol * 2, ctx.epsilon)]


def _verify_worker(payload: tuple[list[str], float, tuple[str, ...] | None, bool]) -> list[ViolationReport]:
    lines, tol, names, self_test = payload
    checks = dict(select_checks(names))
    if self_test:
        checks["self-test-corrupted"] = _corrupted_check
    return verify_graphs((parse_graph6(s) for s in lines), tol, checks)


def cmd_verify(args) -> int:
    if not 1 <= args.n_max <= ENUMERATION_CAP:
        print(f"error: --n-max must be in 1..{ENUMERATION_CAP}", file=sys.stderr)
        return EXIT_USAGE
    names = tuple(args.only.split(",")) if args.only else None
    try:
        select_checks(names)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = [
        to_graph6(g)
        for n in range(1, args.n_max + 1)
        for g in enumerate_graphs(n, connected_only=not args.all_graphs)
    ]
    if args.jobs > 1:
        chunks = [lines[i::args.jobs] for i in range(args.jobs) if lines[i::args.jobs]]
        payloads = [(c, args.tol, names, args.self_test) for c in chunks]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(_verify_worker, payloads)
        violations = [v for part in results for v in part]
    else:
        violations = _verify_worker((lines, args.tol, names, args.self_test))
    violations.sort(key=lambda v: (v.graph6, v.check_name))
    rows = [_violation_row(v) for v in violations]
    _write_output(rows, VIOLATION_COLUMNS, args.format, args.precision, args.violations_file)
    print(f"checked {len(lines)} graphs, {len(violations)} violations", file=sys.stderr)
    return EXIT_VIOLATIONS if violations else EXIT_OK


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _search_row(record: SearchRecord) -> dict:
    return {
        "objective": record.objective,
        "n": record.n,
        "m": record.m,
        "graph6": record.graph6,
        "epsilon": record.epsilon,
        "degree_gap": record.degree_gap,
        "ties": ";".join(f"{g6}:{gap}" for g6, gap in record.ties),
    }


def cmd_search(args) -> int:
    try:
        n_lo, n_hi = _parse_range(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not 2 <= n_lo <= n_hi <= SEARCH_CAP:
        print(f"error: search supports 2 <= n <= {SEARCH_CAP}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.hong:
            records = hong_search(range(n_lo, n_hi + 1))
        else:
            if args.m is None:
                print("error: --bell-max requires --m", file=sys.stderr)
                return EXIT_USAGE
            records = [bell_max_search(n, args.m) for n in range(n_lo, n_hi + 1)]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = [_search_row(r) for r in records]
    _write_output(rows, SEARCH_COLUMNS, args.format, args.precision, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    try:
        g = GENERATORS[args.family](args.size)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(to_graph6(g))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specirr",
        description="Spectral irregularity of small graphs: per-graph bound "
                    "reports, corpus-wide verification, and extremal search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--precision", choices=("sig6", "full"), default="sig6",
                       help="decimal columns: 6 significant digits (default) or full")

    p = sub.add_parser("compute", help="bound report rows for graph6 input")
    p.add_argument("input", nargs="?", help="graph6 file, or '-' for stdin")
    p.add_argument("--inline", action="append", default=[], metavar="G6",
                   help="inline graph6 string (repeatable, replaces file input)")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--strict", action="store_true",
                   help="abort on the first unparsable line instead of skipping")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    add_output_flags(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("verify", help="run every bound check over the enumerated corpus")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--all-graphs", action="store_true",
                   help="include disconnected graphs (default: connected only)")
    p.add_argument("--tol", type=float, default=DEFAULT_CHECK_TOL)
    p.add_argument("--only", help="comma-separated check or group names "
                                  "(groups: core, bounds, subregular, oracle)")
    p.add_argument("--violations-file", default="violations.csv",
                   help="always written, possibly empty (default violations.csv)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--self-test", action="store_true",
                   help="inject a deliberately corrupted check; a healthy "
                        "pipeline must then exit 1 with violations")
    add_output_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="extremal irregularity search over (n, m) cells")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--hong", action="store_true",
                       help="minimal irregularity among connected non-regular graphs")
    group.add_argument("--bell-max", action="store_true",
                       help="maximal irregularity among connected graphs")
    p.add_argument("--n", required=True, help="vertex count or range, e.g. 4 or 4..6")
    p.add_argument("--m", type=int, help="edge count (required for --bell-max)")
    p.add_argument("--out", help="output file (default stdout)")
    add_output_flags(p)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("gen", help="emit a named family graph as graph6")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("size", type=int)
    p.set_defaults(fn=cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SpectralConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
