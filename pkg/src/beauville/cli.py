"""Command-line front end: ``beauville {count,enumerate,classify,verify,table}``.

Exit codes: 0 success, 1 verification failure, 2 usage or level error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from math import gcd

from . import classifier, closed_forms, kernels, report, verification
from .modular import LevelError, check_level, is_valid_level

DEFAULT_BUDGET = 101

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(spec: str) -> list[int]:
    """``"5..55"`` (inclusive), ``"5,7,11"`` or ``"35"``."""
    out: list[int] = []
    try:
        for part in spec.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"cannot parse range {spec!r}; use e.g. 5..55 or 5,7,11") from None
    if not out or min(out) < 1:
        raise UsageError(f"range {spec!r} must contain positive integers")
    return out


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _check_budget(n: int, budget: int, what: str):
    if n > budget:
        raise UsageError(
            f"n={n} exceeds the enumeration budget {budget}; use `beauville count {n}` for the "
            f"closed-form count or raise --budget to {what} anyway"
        )


def _classification(n: int, swap: bool, use_cache: bool, threads: int | None):
    if use_cache:
        cached = report.load_cached(n, swap)
        if cached is not None:
            return cached
    r = classifier.orbits(n, swap=swap, threads=threads)
    if use_cache:
        try:
            report.store_cached(r)
        except OSError as exc:
            print(f"warning: cannot write cache under {report.cache_dir()}: {exc.strerror}", file=sys.stderr)
    return r


def run_count(args) -> int:
    levels = parse_range(args.n)
    if len(levels) == 1:
        check_level(levels[0])
    rows = [closed_forms.theta(n) for n in levels if is_valid_level(n)]
    if args.format == "csv":
        text = report.theta_csv(rows)
    elif len(rows) == 1:
        text = report.dumps(rows[0].as_dict())
    else:
        text = report.dumps([r.as_dict() for r in rows])
    _emit(text, args.output)
    return EXIT_OK


def run_enumerate(args) -> int:
    n = check_level(args.n)
    _check_budget(n, args.budget, "enumerate")
    mats = kernels.members(n)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "a", "b", "c", "d"])
        for row in mats.tolist():
            w.writerow([n, *row])
        text = buf.getvalue()
    else:
        text = report.dumps({"n": n, "count": int(mats.shape[0]), "matrices": [report.matrix_str(r) for r in mats.tolist()]})
    _emit(text, args.output)
    return EXIT_OK


def run_classify(args) -> int:
    n = check_level(args.n)
    _check_budget(n, args.budget, "classify")
    r = _classification(n, not args.no_swap, not args.no_cache, args.threads)
    text = report.report_csv(r) if args.format == "csv" else report.dumps(report.report_to_dict(r))
    _emit(text, args.output)
    return EXIT_OK


def run_verify(args) -> int:
    kernels.set_threads(args.threads)
    levels = parse_range(args.range)
    failed = refused = 0
    lines = []
    for n in levels:
        if not is_valid_level(n):
            lines.append(f"skip   n={n}: not a Beauville level (gcd(n, 6) = {gcd(n, 6)})")
            continue
        if n > args.budget:
            lines.append(f"refuse n={n}: exceeds enumeration budget {args.budget}")
            refused += 1
            continue
        t0 = time.perf_counter()
        cached = report.load_cached(n, True)
        if args.no_cache or cached is None:
            fresh = classifier.orbits(n, threads=args.threads)
        else:
            fresh = cached
        checks = verification.verify_level(n, fresh, args.full_scan, args.samples)
        if args.no_cache and cached is not None:
            checks.append(verification.Check("cache-coherence", verification.reports_equal(cached, fresh), "cached report vs fresh"))
        ok = all(c.ok for c in checks)
        failed += not ok
        status = "pass" if ok else "FAIL"
        lines.append(f"{status}   n={n}: theta={fresh.theta} ({time.perf_counter() - t0:.2f}s)")
        for c in checks:
            if args.verbose or not c.ok:
                lines.append(f"    {'ok ' if c.ok else 'BAD'} {c.name}: {c.detail}")
    checked = sum(1 for line in lines if line.startswith(("pass", "FAIL")))
    lines.append(f"summary: {checked} checked, {failed} failed, {refused} refused")
    _emit("\n".join(lines) + "\n", args.output)
    if failed:
        return EXIT_FAIL
    return EXIT_USAGE if refused else EXIT_OK


def run_table(args) -> int:
    levels = [n for n in parse_range(args.range) if is_valid_level(n)]
    rows = []
    for n in levels:
        row = report.TableRow(closed_forms.theta(n))
        if n <= args.budget:
            r = _classification(n, True, not args.no_cache, args.threads)
            row.orbits = r.theta
            row.stabilizers = r.stabilizer_histogram()
            row.burnside = r.burnside_total // r.group_order
        rows.append(row)
    text = report.table_csv(rows) if args.format == "csv" else report.table_json(rows)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beauville", description="Unmixed Beauville structures on Z_n^2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")

    def enum_flags(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest n to enumerate (default %(default)s)")
        p.add_argument("--threads", type=int, default=None, help="worker threads for the numba kernels")

    p = sub.add_parser("count", help="closed-form number of surfaces")
    p.add_argument("n", help="level, list or range (e.g. 13 or 5..35)")
    common(p)
    p.set_defaults(func=run_count)

    p = sub.add_parser("enumerate", help="list the Beauville matrices mod n")
    p.add_argument("n", type=int)
    common(p)
    enum_flags(p)
    p.set_defaults(func=run_enumerate)

    p = sub.add_parser("classify", help="orbit partition, stabilizers and Burnside breakdown")
    p.add_argument("n", type=int)
    p.add_argument("--no-swap", action="store_true", help="only factor-preserving isomorphisms")
    p.add_argument("--no-cache", action="store_true")
    common(p)
    enum_flags(p)
    p.set_defaults(func=run_classify)

    p = sub.add_parser("verify", help="cross-check formulas, enumeration and oracles")
    p.add_argument("range")
    p.add_argument("--no-cache", action="store_true", help="recompute classifications and compare them with any cached report")
    p.add_argument("--full-scan", type=int, default=13, help="exhaustive oracle scan of GL2 up to this n")
    p.add_argument("--samples", type=int, default=2000, help="oracle sample size above --full-scan")
    p.add_argument("-v", "--verbose", action="store_true")
    common(p, fmt=False)
    enum_flags(p)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("table", help="one row per level: formula counts and enumerated data")
    p.add_argument("range")
    p.add_argument("--no-cache", action="store_true")
    common(p)
    enum_flags(p)
    p.set_defaults(func=run_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LevelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
