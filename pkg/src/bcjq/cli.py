"""Command-line front end.

    bcjq gen BCJ --range 0..10 --format json
    bcjq verify all --grid 30
    bcjq gf --order 64
    bcjq det --range 0..12 --override-entry 4,2,1/2
    bcjq bench 1000 --strategies recurrence,matpow,binet,det

stdout carries data, stderr diagnostics.  Exit status: 0 ok, 1 an identity
expected to hold was refuted (or a cross-check failed), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import bcq, sequences
from .bicomplex import Bicomplex, parse
from .detmat import BCJ_SPEC, bcj_via_det, build_matrix, matrix_to_json
from .identities import IDENTITIES, VerifyConfig, run_identities

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2

SEQUENCES = {
    "J": sequences.j3,
    "V": sequences.v3,
    "U": sequences.u3,
    "BCJ": bcq.bcj,
    "BCV": bcq.bcv,
    "BCU": bcq.bcu,
}

STRATEGIES = ("recurrence", "matpow", "binet", "det")
DET_CAP = 64


class UsageError(Exception):
    pass


def parse_range(text: str) -> Tuple[int, int]:
    """``a..b`` (inclusive) or a single index ``a``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {text!r}; need 0 <= a <= b")
    return lo, hi


def parse_override(text: str) -> Tuple[Tuple[int, int], Bicomplex]:
    try:
        row, col, value = text.split(",", 2)
        return (int(row), int(col)), parse(value)
    except ValueError:
        raise UsageError(f"bad override {text!r}; expected row,col,value") from None


# Output ------------------------------------------------------------------

def _cell(value) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def record_for(n: int, value) -> Dict[str, object]:
    if isinstance(value, Bicomplex):
        rec: Dict[str, object] = {"n": n}
        for k, c in enumerate(value.coeffs):
            rec[f"w{k}"] = _cell(c)
        return rec
    return {"n": n, "value": _cell(value)}


def emit(records: Sequence[Dict[str, object]], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=False) + "\n")
        return
    if not records:
        return
    columns: List[str] = []
    for rec in records:
        for key in rec:
            if key not in columns:
                columns.append(key)
    rows = [[_flat(rec.get(c, "")) for c in columns] for rec in records]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _flat(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


# Subcommands ---------------------------------------------------------------

def cmd_gen(args, out) -> int:
    lo, hi = parse_range(args.range)
    fn = SEQUENCES[args.which]
    emit([record_for(n, fn(n)) for n in range(lo, hi + 1)], args.format, out)
    return EXIT_OK


def _report_records(reports) -> List[Dict[str, object]]:
    return [r.to_dict() for r in reports]


def cmd_verify(args, out) -> int:
    names = list(args.names)
    if args.identities:
        names.extend(n.strip() for n in args.identities.split(",") if n.strip())
    if not names:
        names = ["all"]
    unknown = [n for n in names if n != "all" and n not in IDENTITIES]
    if unknown:
        raise UsageError(f"unknown identities: {', '.join(unknown)}; "
                         f"known: {', '.join(IDENTITIES)}")
    config = VerifyConfig(grid=args.grid, gap=args.gap, order=args.order, jobs=args.jobs)
    reports = run_identities(names, config, jobs=args.jobs)
    emit(_report_records(reports), args.format, out)
    bad = [r.name for r in reports if r.unexpected]
    for r in reports:
        if r.refuted:
            tag = "UNEXPECTED" if r.unexpected else "expected"
            print(f"{r.name}: refuted ({tag}) at {r.counterexample}", file=sys.stderr)
    return EXIT_REFUTED if bad else EXIT_OK


def cmd_gf(args, out) -> int:
    if args.order < 3:
        raise UsageError("--order must be at least 3")
    config = VerifyConfig(order=args.order)
    reports = run_identities(["genfun", "partial_fractions"], config)
    emit(_report_records(reports), args.format, out)
    return EXIT_REFUTED if any(r.unexpected for r in reports) else EXIT_OK


def cmd_det(args, out) -> int:
    lo, hi = parse_range(args.range)
    overrides = dict(parse_override(o) for o in args.override_entry or [])
    if args.dump:
        out.write(matrix_to_json(build_matrix(BCJ_SPEC, hi, overrides)) + "\n")
        return EXIT_OK
    records = []
    mismatch = False
    for n in range(lo, hi + 1):
        value = bcj_via_det(n, overrides)
        agrees = value == bcq.bcj(n)
        mismatch |= not agrees
        rec = record_for(n, value)
        rec["matches_bcj"] = agrees
        records.append(rec)
    emit(records, args.format, out)
    # with overrides a mismatch is a probe result, not a failure
    return EXIT_REFUTED if mismatch and not overrides else EXIT_OK


def _sweep_recurrence(indices):
    values = {}
    hi = max(indices)
    a, b, c = bcq.BCJ0, bcq.BCJ1, bcq.BCJ2
    for n in range(hi + 1):
        values[n] = a
        a, b, c = b, c, c + b + 2 * a
    return [values[n] for n in indices]


STRATEGY_FUNCS = {
    "recurrence": _sweep_recurrence,
    "matpow": lambda idx: [bcq.bcj_matpow(n) for n in idx],
    "binet": lambda idx: [bcq.bcj_binet(n) for n in idx],
    "det": lambda idx: [bcj_via_det(n) for n in idx],
}


class BenchDisagreement(RuntimeError):
    def __init__(self, strategy: str, n: int):
        super().__init__(f"strategy {strategy!r} disagrees with the reference at n={n}")
        self.strategy = strategy
        self.n = n


def run_bench(n_max: int, strategies: Sequence[str], det_cap: int = DET_CAP,
              clock=time.perf_counter) -> List[Dict[str, object]]:
    """Time each strategy over n = 0..n_max and cross-check every value.

    The reference is the definitional path (four cached scalar terms).  A
    disagreement raises :class:`BenchDisagreement` before any time is reported.
    """
    rows = []
    for name in strategies:
        top = min(n_max, det_cap) if name == "det" else n_max
        indices = list(range(top + 1))
        t0 = clock()
        values = STRATEGY_FUNCS[name](indices)
        elapsed = clock() - t0
        for n, v in zip(indices, values):
            if v != bcq.bcj(n):
                raise BenchDisagreement(name, n)
        rows.append({"strategy": name, "n_max": top, "count": len(indices),
                     "agree": True, "seconds": round(elapsed, 6)})
    return rows


def cmd_bench(args, out) -> int:
    if args.n_max < 0:
        raise UsageError("n_max must be non-negative")
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    unknown = [s for s in strategies if s not in STRATEGIES]
    if unknown or not strategies:
        raise UsageError(f"unknown strategies: {', '.join(unknown) or '(none)'}; "
                         f"known: {', '.join(STRATEGIES)}")
    try:
        rows = run_bench(args.n_max, strategies, det_cap=args.det_cap)
    except BenchDisagreement as exc:
        print(f"bench aborted: {exc}", file=sys.stderr)
        return EXIT_REFUTED
    if args.no_timing:
        for row in rows:
            row.pop("seconds")
    emit(rows, args.format, out)
    return EXIT_OK


# Parser --------------------------------------------------------------------

def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} is negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcjq",
        description="Exact bicomplex third-order Jacobsthal quaternions.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    p = sub.add_parser("gen", help="generate sequence terms")
    p.add_argument("which", choices=tuple(SEQUENCES))
    p.add_argument("--range", default="0..10", help="index range a..b (inclusive)")
    fmt(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="verify identities")
    p.add_argument("names", nargs="*", help="identity names, or 'all'")
    p.add_argument("--identities", help="comma-separated identity names")
    p.add_argument("--grid", type=_nonneg, default=30)
    p.add_argument("--gap", type=_nonneg, default=30)
    p.add_argument("--order", type=_nonneg, default=64)
    p.add_argument("--jobs", type=_nonneg, default=1)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gf", help="generating-function checks")
    p.add_argument("--order", type=_nonneg, default=64)
    fmt(p)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("det", help="terms via the banded determinant")
    p.add_argument("--range", default="0..12")
    p.add_argument("--override-entry", action="append", metavar="ROW,COL,VALUE",
                   help="replace a 1-based matrix entry (repeatable)")
    p.add_argument("--dump", action="store_true",
                   help="print the matrix for the top index as JSON and exit")
    fmt(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("bench", help="time and cross-check evaluation strategies")
    p.add_argument("n_max", type=_nonneg)
    p.add_argument("--strategies", default="recurrence,matpow,binet")
    p.add_argument("--det-cap", type=_nonneg, default=DET_CAP)
    p.add_argument("--no-timing", action="store_true",
                   help="omit the seconds column (deterministic output)")
    fmt(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"bcjq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
