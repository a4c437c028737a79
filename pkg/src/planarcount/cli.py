"""Command line front end: compute one count, tabulate a range, verify.

Exit codes: 0 success, 1 computation or cache failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import NamedTuple, Optional

from .cache import CacheError, load_cache, save_cache
from .recursion import CountKey, MemoTable, planar_count
from .verification import run_verification

__all__ = ["main"]

_DUAL_SPACE_DIM = 3


class OutputRow(NamedTuple):
    d: int
    r: int
    s: int
    theta: int
    count: int


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {value}")
    return value


def _verify_degree(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be at least 2, got {value}")
    return value


def _emit(rows: list[OutputRow], fmt: str, single: bool) -> None:
    if fmt == "csv":
        sys.stdout.write("d,r,s,theta,count\n")
        for row in rows:
            sys.stdout.write(f"{row.d},{row.r},{row.s},{row.theta},{row.count}\n")
        return
    # Counts can exceed what consumers of the JSON may parse losslessly
    # into native numbers, so they are serialized as strings.
    objects = [
        {"d": row.d, "r": row.r, "s": row.s, "theta": row.theta, "count": str(row.count)}
        for row in rows
    ]
    payload: object = objects[0] if single else objects
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_memo(cache_path: Optional[Path]) -> MemoTable:
    if cache_path is not None and cache_path.exists():
        return load_cache(cache_path)
    return MemoTable()


def _on_shell_keys(d: int) -> list[CountKey]:
    """Every key at degree d satisfying the dimension constraint with
    s and theta in the geometric range 0..3 and r >= 0."""
    keys = []
    for s in range(_DUAL_SPACE_DIM + 1):
        for theta in range(_DUAL_SPACE_DIM + 1):
            r = 3 * d + 2 - 2 * s - theta
            if r >= 0:
                keys.append(CountKey(d, r, s, theta))
    return sorted(keys)


def _cmd_compute(args: argparse.Namespace) -> int:
    memo = _load_memo(args.cache)
    key = CountKey(args.d, args.r, args.s, args.theta)
    value = planar_count(key, memo)
    if args.cache is not None:
        save_cache(memo, args.cache)
    _emit([OutputRow(*key, value)], args.format, single=True)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    memo = _load_memo(args.cache)
    rows = [
        OutputRow(*key, planar_count(key, memo))
        for d in range(1, args.max_d + 1)
        for key in _on_shell_keys(d)
    ]
    if args.cache is not None:
        save_cache(memo, args.cache)
    _emit(rows, args.format, single=False)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(args.max_d)
    width = max(len(result.name) for result in results)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {result.name:<{width}}  {result.detail}")
    failures = sum(1 for result in results if not result.passed)
    if failures:
        print(f"verify: {failures} of {len(results)} checks FAILED")
        return 1
    print(f"verify: all {len(results)} checks passed")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarcount",
        description="Exact counts of rational planar curves in projective 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute a single count")
    compute.add_argument("--d", type=_positive_int, required=True, help="curve degree (>= 1)")
    compute.add_argument("--r", type=_nonnegative_int, required=True, help="line conditions")
    compute.add_argument("--s", type=_nonnegative_int, required=True, help="point conditions")
    compute.add_argument(
        "--theta", type=_nonnegative_int, required=True,
        help="hyperplane-class powers on the space of planes",
    )
    compute.set_defaults(handler=_cmd_compute)

    table = sub.add_parser("table", help="tabulate all on-shell counts up to a degree")
    table.add_argument("--max-d", type=_positive_int, required=True, help="largest degree")
    table.set_defaults(handler=_cmd_table)

    verify = sub.add_parser("verify", help="run the self-check battery")
    verify.add_argument(
        "--max-d", type=_verify_degree, default=6,
        help="largest degree to verify (default 6, minimum 2)",
    )
    verify.set_defaults(handler=_cmd_verify)

    for cmd in (compute, table):
        cmd.add_argument(
            "--format", choices=("csv", "json"), default="csv", help="output format"
        )
        cmd.add_argument(
            "--cache", type=Path, default=None,
            help="cache file to load (if present) and save back",
        )
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
