"""Exact counts of rational planar curves in projective 3-space.

The central quantity is ``planar_count(CountKey(d, r, s, theta))``: the
number of rational curves of degree ``d`` whose image spans a plane,
meeting ``r`` generic lines and ``s`` generic points, paired with
``theta`` powers of the hyperplane class on the space of planes.  All
arithmetic is exact (Python integers throughout, no floating point).
"""

from .cache import CacheError, CacheValidationError, load_cache, save_cache
from .exact_arith import binomial
from .plane_curves import CrossCheckRow, cross_check, kontsevich_p2
from .quotient_ring import conic_count, line_count
from .recursion import (
    CountKey,
    MemoIntegrityError,
    MemoTable,
    planar_count,
    two_component_count,
)
from .verification import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "CacheError",
    "CacheValidationError",
    "CheckResult",
    "CountKey",
    "CrossCheckRow",
    "MemoIntegrityError",
    "MemoTable",
    "binomial",
    "conic_count",
    "cross_check",
    "kontsevich_p2",
    "line_count",
    "load_cache",
    "planar_count",
    "run_verification",
    "save_cache",
    "two_component_count",
]
