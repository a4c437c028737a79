"""Memoized recursion for counts of rational planar curves in 3-space.

``planar_count(CountKey(d, r, s, theta))`` is the number of rational
degree-``d`` curves whose image spans a plane, meeting ``r`` generic
lines and ``s`` generic points, paired with ``theta`` powers of the
hyperplane class on the space of planes (``theta = 0`` is the plain
enumerative count).  The count vanishes unless

    r + 2s + theta = 3d + 2

(the dimension of the family), and also whenever ``s > 3`` (four or more
generic points never lie in one plane) or ``theta > 3`` (the space of
planes is 3-dimensional).

Degrees 1 and 2 are evaluated in closed form in the cohomology rings of
the corresponding incidence bundles.  For ``d >= 3`` the counts satisfy
a recursion obtained by pulling two line conditions and one point
condition through a cross-ratio degeneration of the domain curve:

    N(d, r, s, theta) = 2d * N(d, r-2, s+1, theta)
        + sum over 0 <= r1 <= r-3, 0 <= s1 <= s, 0 < d1 < d of
          C(r-3, r1) C(s, s1) d1^2 d2 *
          [ d2 * B(d1, r1+1, s1 | d2, r2-2, s2 | theta)
          - d1 * B(d1, r1,   s1 | d2, r2-1, s2 | theta) ]

with d2 = d - d1, r2 = r - r1, s2 = s - s1, where ``B`` is
``two_component_count``: the count of two-component curves of degrees
(d1, d2) lying in a common plane, with the incidence conditions
distributed between the components as indicated.
``B`` itself expands through the diagonal of the space of planes,

    B(d1, r1, s1 | d2, r2, s2 | theta)
        = sum over i = 0..3 of N(d1, r1, s1, i) * N(d2, r2, s2, theta+3-i).

Any negative index makes a term vanish; together with the dimension
constraint this bounds the recursion, and a shared ``MemoTable`` keeps
the evaluation polynomial in ``d``.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

from .exact_arith import binomial
from .quotient_ring import conic_count, line_count

__all__ = [
    "CountKey",
    "MemoIntegrityError",
    "MemoTable",
    "planar_count",
    "two_component_count",
]

_DUAL_SPACE_DIM = 3  # the space of planes in projective 3-space is a P^3


class CountKey(NamedTuple):
    """Index of one planar count.

    ``d``: curve degree (>= 1); ``r``: generic line conditions;
    ``s``: generic point conditions; ``theta``: powers of the hyperplane
    class on the space of planes.
    """

    d: int
    r: int
    s: int
    theta: int

    def on_shell(self) -> bool:
        """Whether the conditions match the dimension of the family."""
        return self.r + 2 * self.s + self.theta == 3 * self.d + 2


class MemoIntegrityError(RuntimeError):
    """A memo insert tried to change an already-stored count."""


class MemoTable:
    """Exact-count cache keyed by CountKey.

    Inserts are idempotent: re-inserting the stored value is a no-op,
    while inserting a different value raises MemoIntegrityError, since a
    disagreement can only mean corrupted state or a broken invariant.
    """

    __slots__ = ("_table", "hits", "misses")

    def __init__(self) -> None:
        self._table: dict[CountKey, int] = {}
        self.hits = 0
        self.misses = 0

    def lookup(self, key: CountKey) -> Optional[int]:
        value = self._table.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def insert(self, key: CountKey, value: int) -> None:
        stored = self._table.get(key)
        if stored is None:
            self._table[key] = value
        elif stored != value:
            raise MemoIntegrityError(
                f"memo conflict at {tuple(key)}: stored {stored}, new {value}"
            )

    def __contains__(self, key: CountKey) -> bool:
        return key in self._table

    def __len__(self) -> int:
        return len(self._table)

    def items(self) -> Iterator[tuple[CountKey, int]]:
        return iter(self._table.items())


def planar_count(key: CountKey, memo: Optional[MemoTable] = None) -> int:
    """Exact count of rational planar degree-d curves for one CountKey.

    Returns 0 for any key violating the vanishing rules (dimension
    mismatch, s > 3, theta > 3, or a negative condition count); raises
    ValueError for d < 1.  ``memo`` is shared across the recursion and
    only ever holds keys that pass the vanishing screen.
    """
    d, r, s, theta = key
    if d < 1:
        raise ValueError(f"curve degree must be >= 1, got d={d}")
    if r < 0 or s < 0 or theta < 0:
        return 0
    if r + 2 * s + theta != 3 * d + 2:
        return 0
    if s > _DUAL_SPACE_DIM or theta > _DUAL_SPACE_DIM:
        return 0

    if d == 1:
        return line_count(r, s, theta)
    if d == 2:
        return conic_count(r, s, theta)

    if memo is None:
        memo = MemoTable()
    key = CountKey(d, r, s, theta)
    cached = memo.lookup(key)
    if cached is not None:
        return cached

    # Trading two line conditions for a point condition.
    total = 2 * d * planar_count(CountKey(d, r - 2, s + 1, theta), memo)

    # Two-component boundary terms: three conditions (two lines and a
    # point, beyond the r1/s1 split) steer the degeneration, hence the
    # C(r-3, r1) weight and the shifted line counts inside B.
    for r1 in range(r - 2):
        r2 = r - r1
        line_split = binomial(r - 3, r1)
        for s1 in range(s + 1):
            s2 = s - s1
            point_split = binomial(s, s1)
            for d1 in range(1, d):
                d2 = d - d1
                weight = line_split * point_split * d1 * d1 * d2
                total += weight * (
                    d2 * two_component_count(d1, r1 + 1, s1, d2, r2 - 2, s2, theta, memo)
                    - d1 * two_component_count(d1, r1, s1, d2, r2 - 1, s2, theta, memo)
                )

    memo.insert(key, total)
    return total


def two_component_count(
    d1: int,
    r1: int,
    s1: int,
    d2: int,
    r2: int,
    s2: int,
    theta: int,
    memo: Optional[MemoTable] = None,
) -> int:
    """Count of coplanar two-component curves with split conditions.

    Both components are rational, of degrees d1 and d2, lying in a single
    common plane; the line and point conditions are split as (r1, s1) on
    the first component and (r2, s2) on the second.  Requiring one common
    plane is requiring the two plane classes to meet the diagonal of the
    product of two copies of the space of planes, which expands into the
    sum over complementary hyperplane powers below.
    """
    if d1 < 1 or d2 < 1:
        raise ValueError(f"component degrees must be >= 1, got ({d1}, {d2})")
    if memo is None:
        memo = MemoTable()
    return sum(
        planar_count(CountKey(d1, r1, s1, i), memo)
        * planar_count(CountKey(d2, r2, s2, theta + _DUAL_SPACE_DIM - i), memo)
        for i in range(_DUAL_SPACE_DIM + 1)
    )
