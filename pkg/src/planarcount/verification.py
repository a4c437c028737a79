"""Self-check battery behind the ``verify`` CLI command."""

from __future__ import annotations

from typing import NamedTuple

from . import reference_tables as ref
from .plane_curves import cross_check
from .quotient_ring import conic_count, line_count
from .recursion import CountKey, MemoTable, planar_count

__all__ = ["CheckResult", "run_verification"]

_ORACLE_DEGREE_LIMIT = 8
_SWEEP_DEGREE_LIMIT = 5
_BASE_SWEEP_BOUND = 10


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _check_base_tables() -> CheckResult:
    bad = []
    for (r, s, theta), expected in ref.LINE_COUNTS.items():
        if line_count(r, s, theta) != expected:
            bad.append(f"degree 1 at {(r, s, theta)}")
    for (r, s, theta), expected in ref.CONIC_COUNTS.items():
        if conic_count(r, s, theta) != expected:
            bad.append(f"degree 2 at {(r, s, theta)}")
    checked = len(ref.LINE_COUNTS) + len(ref.CONIC_COUNTS)
    if bad:
        return CheckResult("base-tables", False, "mismatch: " + ", ".join(bad))
    return CheckResult("base-tables", True, f"{checked} published values reproduced")


def _check_planar_references(max_d: int, memo: MemoTable) -> CheckResult:
    keys = [(d, r) for (d, r) in ref.PLANAR_COUNTS if d <= max_d]
    bad = [
        f"(d={d}, r={r})"
        for d, r in keys
        if planar_count(CountKey(d, r, 0, 0), memo) != ref.PLANAR_COUNTS[(d, r)]
    ]
    if bad:
        return CheckResult("planar-counts", False, "mismatch at " + ", ".join(bad))
    if not keys:
        return CheckResult("planar-counts", True, f"no published counts at degree <= {max_d}")
    return CheckResult("planar-counts", True, f"{len(keys)} published counts reproduced")


def _check_oracle(max_d: int, memo: MemoTable) -> CheckResult:
    limit = min(max_d, _ORACLE_DEGREE_LIMIT)
    rows = cross_check(limit, memo)
    bad = [f"d={row.d} ({row.planar} vs {row.oracle})" for row in rows if not row.match]
    if bad:
        return CheckResult("oracle-cross-check", False, "mismatch at " + ", ".join(bad))
    return CheckResult(
        "oracle-cross-check", True, f"plane-curve oracle agrees for d = 2..{limit}"
    )


def _check_nodal_consistency(max_d: int, memo: MemoTable) -> CheckResult:
    degrees = [d for d in ref.NODAL_COUNTS if d <= max_d]
    bad = []
    for d in degrees:
        expected = ref.NODAL_COUNTS[d] - ref.REDUCIBLE_NODAL_COUNTS[d]
        if planar_count(CountKey(d, 3 * d + 2, 0, 0), memo) != expected:
            bad.append(f"d={d}")
    if bad:
        return CheckResult("nodal-consistency", False, "mismatch at " + ", ".join(bad))
    return CheckResult(
        "nodal-consistency", True, f"{len(degrees)} nodal-count identities hold"
    )


def _check_vanishing(max_d: int, memo: MemoTable) -> CheckResult:
    bad = []
    checked = 0
    for r in range(_BASE_SWEEP_BOUND + 1):
        for s in range(_BASE_SWEEP_BOUND + 1):
            for theta in range(_BASE_SWEEP_BOUND + 1):
                key = (r, s, theta)
                if line_count(r, s, theta) != ref.LINE_COUNTS.get(key, 0):
                    bad.append(f"degree 1 at {key}")
                if conic_count(r, s, theta) != ref.CONIC_COUNTS.get(key, 0):
                    bad.append(f"degree 2 at {key}")
                checked += 2
    for d in range(1, min(max_d, _SWEEP_DEGREE_LIMIT) + 1):
        for r in range(21):
            for s in range(6):
                for theta in range(6):
                    key = CountKey(d, r, s, theta)
                    if key.on_shell() and s <= 3 and theta <= 3:
                        continue
                    checked += 1
                    if planar_count(key, memo) != 0:
                        bad.append(f"degree {d} at {tuple(key)}")
    if bad:
        return CheckResult(
            "vanishing-sweeps", False, "nonzero where a count must vanish: " + ", ".join(bad[:5])
        )
    return CheckResult("vanishing-sweeps", True, f"{checked} forced zeros confirmed")


def run_verification(max_d: int = 6) -> list[CheckResult]:
    """Run every self-check up to degree ``max_d`` (>= 2) and report each.

    The checks: the degree 1 and 2 tables against published values, the
    line-conditions-only planar counts against published values, the
    plane-curve oracle bridge (capped at degree 8), the nodal-count
    consistency identity, and exhaustive vanishing sweeps.
    """
    if max_d < 2:
        raise ValueError(f"max_d must be >= 2, got {max_d}")
    memo = MemoTable()
    return [
        _check_base_tables(),
        _check_planar_references(max_d, memo),
        _check_oracle(max_d, memo),
        _check_nodal_consistency(max_d, memo),
        _check_vanishing(max_d, memo),
    ]
