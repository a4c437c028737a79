"""Exact integer helpers.

Counts are carried as plain Python ints everywhere (arbitrary precision,
no floating point), so the only thing needed here is a total binomial
coefficient for the recursion weights.
"""

from __future__ import annotations

from math import comb

__all__ = ["binomial"]


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), extended by 0 for k < 0 or k > n.

    Total in k so summations can index past their natural range without
    guarding the boundary terms.  Requires n >= 0.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)
