"""Published reference values used by the tests and the verify command.

Everything in this module is a literal constant transcribed from the
published literature on counts of planar rational curves in projective
3-space.  Nothing here is computed by this package; the verification
suite recomputes each count independently and compares against these.
"""

from __future__ import annotations

__all__ = [
    "LINE_COUNTS",
    "CONIC_COUNTS",
    "PLANAR_COUNTS",
    "NODAL_COUNTS",
    "REDUCIBLE_NODAL_COUNTS",
]

#: Degree 1 counts, keyed by (r, s, theta); keys not listed count 0.
#: Nonzero entries require r + 2s + theta = 5.
LINE_COUNTS: dict[tuple[int, int, int], int] = {
    (1, 2, 0): 0,
    (3, 1, 0): 0,
    (5, 0, 0): 0,
    (0, 2, 1): 1,
    (2, 1, 1): 1,
    (4, 0, 1): 2,
    (1, 1, 2): 1,
    (3, 0, 2): 2,
    (0, 1, 3): 0,
    (2, 0, 3): 1,
}

#: Degree 2 counts, keyed by (r, s, theta); keys not listed count 0.
#: Nonzero entries require r + 2s + theta = 8.
CONIC_COUNTS: dict[tuple[int, int, int], int] = {
    (8, 0, 0): 92,
    (6, 1, 0): 18,
    (4, 2, 0): 4,
    (2, 3, 0): 1,
    (7, 0, 1): 34,
    (5, 1, 1): 6,
    (3, 2, 1): 1,
    (1, 3, 1): 0,
    (6, 0, 2): 8,
    (4, 1, 2): 1,
    (2, 2, 2): 0,
    (0, 3, 2): 0,
    (5, 0, 3): 1,
    (3, 1, 3): 0,
    (1, 2, 3): 0,
}

#: Planar counts with line conditions only, keyed by (d, r) at
#: s = theta = 0 (so r = 3d + 2).
PLANAR_COUNTS: dict[tuple[int, int], int] = {
    (3, 11): 12960,
    (4, 14): 3727920,
    (5, 17): 1979329280,
    (6, 20): 1763519463360,
}

#: Counts of degree-d plane curves in 3-space with delta = (d-1)(d-2)/2
#: nodes (the maximal number, forcing rational curves plus reducible
#: degenerations) through 3d + 2 generic lines.  Published alongside the
#: reducible corrections below; the difference must equal the planar
#: count at (d, 3d + 2, 0, 0).
NODAL_COUNTS: dict[int, int] = {
    3: 12960,
    4: 4057340,
    5: 2487128120,
    6: 2681467886460,
}

#: Contribution of reducible curves to NODAL_COUNTS, same keys.
REDUCIBLE_NODAL_COUNTS: dict[int, int] = {
    3: 0,
    4: 329420,
    5: 507798840,
    6: 917948423100,
}
