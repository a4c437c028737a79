"""Classical rational plane curve counts, used as an independent oracle.

``kontsevich_p2(d)`` is the number of rational curves of degree ``d`` in
the projective plane through ``3d - 1`` generic points: 1, 1, 12, 620,
87304, ...  It is computed here by the classical recursion

    N(1) = 1,
    N(d) = sum over d1 + d2 = d, d1, d2 > 0 of
           N(d1) N(d2) d1^2 d2 [ d2 C(3d-4, 3d1-2) - d1 C(3d-4, 3d1-1) ]

which shares nothing with the planar-curve recursion except the binomial
helper.  Three generic points in 3-space span a unique plane, so the
planar count at (d, 3d-4, 3, 0) must equal ``kontsevich_p2(d)``; the
``cross_check`` sweep exercises that bridge degree by degree.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .exact_arith import binomial
from .recursion import CountKey, MemoTable, planar_count

__all__ = ["CrossCheckRow", "cross_check", "kontsevich_p2"]


def kontsevich_p2(d: int, _memo: Optional[dict[int, int]] = None) -> int:
    """Rational plane curves of degree d through 3d - 1 generic points."""
    if d < 1:
        raise ValueError(f"curve degree must be >= 1, got d={d}")
    if d == 1:
        return 1
    memo = {} if _memo is None else _memo
    cached = memo.get(d)
    if cached is not None:
        return cached
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += (
            kontsevich_p2(d1, memo)
            * kontsevich_p2(d2, memo)
            * d1 * d1 * d2
            * (d2 * binomial(3 * d - 4, 3 * d1 - 2) - d1 * binomial(3 * d - 4, 3 * d1 - 1))
        )
    memo[d] = total
    return total


class CrossCheckRow(NamedTuple):
    """One degree of the planar-count vs plane-count comparison."""

    d: int
    planar: int
    oracle: int

    @property
    def match(self) -> bool:
        return self.planar == self.oracle


def cross_check(d_max: int, memo: Optional[MemoTable] = None) -> list[CrossCheckRow]:
    """Compare planar counts with three point conditions against the
    plane-curve oracle for every degree 2..d_max.

    Degree 1 is excluded: the bridge key would need 3d - 4 = -1 line
    conditions, so there is nothing meaningful to compare there.
    """
    if d_max < 2:
        raise ValueError(f"cross_check needs d_max >= 2, got {d_max}")
    if memo is None:
        memo = MemoTable()
    rows = []
    for d in range(2, d_max + 1):
        planar = planar_count(CountKey(d, 3 * d - 4, 3, 0), memo)
        rows.append(CrossCheckRow(d=d, planar=planar, oracle=kontsevich_p2(d)))
    return rows
