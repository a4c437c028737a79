"""Cohomology rings behind the degree 1 and degree 2 planar counts.

A planar line in projective 3-space is a point of the incidence variety
{(line, plane) : line contained in plane}, a projective plane bundle over
the dual projective 3-space.  Its integral cohomology is

    Z[a, l] / (l^3 + l^2 a + l a^2 + a^3,  a^4)

where ``a`` is the hyperplane class pulled back from the base (the space
of planes) and ``l`` is the fiberwise hyperplane class.  Planar conics
form the projectivization of the rank-6 bundle of quadratic forms on the
varying plane, a P^5 bundle over the same base, with cohomology

    Z[a, l] / (l^6 + 4 l^5 a + 10 l^4 a^2 + 20 l^3 a^3,  a^4).

In either ring the cycle of curves meeting a generic line is ``l + d*a``
(d the degree) and the cycle of curves through a generic point is
``l*a``.  Intersection numbers are the coefficients of the top monomial
``l^(m-1) * a^3`` where ``m`` is the fiber degree, so counting planar
lines or conics is multiplication in these rings followed by reading off
one coefficient.

Representation: an element is kept fully reduced as an ``m`` by 4 grid of
integer coefficients, entry ``(i, j)`` holding the coefficient of
``l^i a^j`` with ``0 <= i < m`` and ``0 <= j <= 3``.  Reduction rewrites
``l^m`` as minus the tail of the fiber relation and discards any power
``a^4`` or higher; both rewrites strictly lower the ``l`` exponent or are
outright truncations, so reduction terminates and reduced forms are
unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "RingElement",
    "RingSpec",
    "LINE_RING",
    "CONIC_RING",
    "from_terms",
    "monomial",
    "ring_add",
    "ring_mul",
    "ring_one",
    "ring_pow",
    "ring_zero",
    "top_coefficient",
    "line_count",
    "conic_count",
]

_BASE_TRUNCATION = 4  # a^4 = 0: the base of both bundles is projective 3-space


def _monomial_str(i: int, j: int, coeff: int) -> str:
    factors = []
    if i:
        factors.append("l" if i == 1 else f"l^{i}")
    if j:
        factors.append("a" if j == 1 else f"a^{j}")
    if not factors:
        return str(coeff)
    if coeff == 1:
        return "*".join(factors)
    if coeff == -1:
        return "-" + "*".join(factors)
    return "*".join([str(coeff)] + factors)


@dataclass(frozen=True)
class RingElement:
    """A reduced ring element: ``coeffs[i][j]`` multiplies ``l^i a^j``."""

    coeffs: tuple[tuple[int, int, int, int], ...]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def __str__(self) -> str:
        parts = [
            _monomial_str(i, j, c)
            for i in range(len(self.coeffs) - 1, -1, -1)
            for j, c in enumerate(self.coeffs[i])
            if c != 0
        ]
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class RingSpec:
    """One truncated quotient ring together with its incidence cycles.

    ``fiber_degree`` is the degree ``m`` of the fiber relation, which
    reads ``l^m = -(relation[0] l^(m-1) a + ... + relation[m-1] a^m)``;
    entries of ``relation`` beyond the base truncation never matter
    because the corresponding monomials carry ``a^4`` or higher.
    """

    fiber_degree: int
    relation: tuple[int, ...]
    line_cycle: RingElement
    point_cycle: RingElement

    def __post_init__(self) -> None:
        if self.fiber_degree < 1:
            raise ValueError("fiber_degree must be positive")
        if len(self.relation) != self.fiber_degree:
            raise ValueError("relation must list fiber_degree coefficients")

    @property
    def top_monomial(self) -> tuple[int, int]:
        """Exponents (i, j) of the monomial carrying intersection numbers."""
        return (self.fiber_degree - 1, _BASE_TRUNCATION - 1)


def _reduce_rows(rows: list[list[int]], spec: RingSpec) -> None:
    """Rewrite every l-power >= fiber_degree via the relation, in place.

    Works from the highest row down so each substitution lands on rows
    that are still to be processed; coefficients falling past the base
    truncation are dropped.
    """
    m = spec.fiber_degree
    for i in range(len(rows) - 1, m - 1, -1):
        row = rows[i]
        for j in range(_BASE_TRUNCATION):
            c = row[j]
            if c == 0:
                continue
            row[j] = 0
            # l^i a^j = l^(i-m) * l^m * a^j -> substitute the relation tail.
            for k in range(1, _BASE_TRUNCATION - j):
                rows[i - k][j + k] -= spec.relation[k - 1] * c


def _freeze(rows: Iterable[Iterable[int]], m: int) -> RingElement:
    grid = tuple(tuple(row) for row in rows)[:m]
    return RingElement(coeffs=grid)


def from_terms(spec: RingSpec, terms: Mapping[tuple[int, int], int]) -> RingElement:
    """Build the reduced element with the given ``(l_exp, a_exp) -> coeff`` terms.

    Exponents may exceed the ring bounds: l-powers are reduced through the
    fiber relation and a-powers at or above the truncation are dropped.
    """
    height = max([spec.fiber_degree] + [i + 1 for i, _ in terms])
    rows = [[0] * _BASE_TRUNCATION for _ in range(height)]
    for (i, j), c in terms.items():
        if i < 0 or j < 0:
            raise ValueError(f"negative exponent in term (l^{i} a^{j})")
        if j < _BASE_TRUNCATION:
            rows[i][j] += c
    _reduce_rows(rows, spec)
    return _freeze(rows, spec.fiber_degree)


def ring_zero(spec: RingSpec) -> RingElement:
    return from_terms(spec, {})


def ring_one(spec: RingSpec) -> RingElement:
    return from_terms(spec, {(0, 0): 1})


def monomial(spec: RingSpec, l_exp: int, a_exp: int, coeff: int = 1) -> RingElement:
    return from_terms(spec, {(l_exp, a_exp): coeff})


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    if len(x.coeffs) != len(y.coeffs):
        raise ValueError("cannot add elements of different rings")
    return RingElement(
        coeffs=tuple(
            tuple(cx + cy for cx, cy in zip(rx, ry))
            for rx, ry in zip(x.coeffs, y.coeffs)
        )
    )


def ring_mul(x: RingElement, y: RingElement, spec: RingSpec) -> RingElement:
    """Product of two reduced elements, reduced again.

    The free product of two elements with l-degree below ``m`` has
    l-degree below ``2m - 1``, so a work grid of that height suffices
    before reduction.
    """
    m = spec.fiber_degree
    work = [[0] * _BASE_TRUNCATION for _ in range(2 * m - 1)]
    for i, row_x in enumerate(x.coeffs):
        for j, cx in enumerate(row_x):
            if cx == 0:
                continue
            for k, row_y in enumerate(y.coeffs):
                for n, cy in enumerate(row_y):
                    if cy == 0 or j + n >= _BASE_TRUNCATION:
                        continue
                    work[i + k][j + n] += cx * cy
    _reduce_rows(work, spec)
    return _freeze(work, m)


@lru_cache(maxsize=None)
def ring_pow(x: RingElement, n: int, spec: RingSpec) -> RingElement:
    """n-th power of a reduced element (n >= 0), memoized.

    The linear recursion is deliberate: the verification sweeps evaluate
    many consecutive powers of the same cycle, and caching each exponent
    makes those sweeps linear instead of quadratic.
    """
    if n < 0:
        raise ValueError(f"ring_pow requires n >= 0, got n={n}")
    if n == 0:
        return ring_one(spec)
    return ring_mul(ring_pow(x, n - 1, spec), x, spec)


def top_coefficient(x: RingElement, spec: RingSpec) -> int:
    """Coefficient of the top monomial l^(m-1) a^3, i.e. the degree of x
    as a zero-cycle on the underlying bundle."""
    i, j = spec.top_monomial
    return x.coeffs[i][j]


def _make_ring(fiber_degree: int, relation: tuple[int, ...], curve_degree: int) -> RingSpec:
    line_rows = [[0] * _BASE_TRUNCATION for _ in range(fiber_degree)]
    line_rows[1][0] = 1  # l
    line_rows[0][1] = curve_degree  # d * a
    point_rows = [[0] * _BASE_TRUNCATION for _ in range(fiber_degree)]
    point_rows[1][1] = 1  # l * a
    return RingSpec(
        fiber_degree=fiber_degree,
        relation=relation,
        line_cycle=_freeze(line_rows, fiber_degree),
        point_cycle=_freeze(point_rows, fiber_degree),
    )


#: Ring for planar lines: P^2 bundle of lines-in-a-plane over the dual P^3.
LINE_RING = _make_ring(3, (1, 1, 1), curve_degree=1)

#: Ring for planar conics: P^5 bundle of plane conic equations over the dual P^3.
CONIC_RING = _make_ring(6, (4, 10, 20, 0, 0, 0), curve_degree=2)


def _incidence_count(spec: RingSpec, r: int, s: int, theta: int) -> int:
    if r < 0 or s < 0 or theta < 0:
        raise ValueError(f"condition counts must be nonnegative, got {(r, s, theta)}")
    product = ring_pow(spec.line_cycle, r, spec)
    product = ring_mul(product, ring_pow(spec.point_cycle, s, spec), spec)
    product = ring_mul(product, ring_pow(monomial(spec, 0, 1), theta, spec), spec)
    return top_coefficient(product, spec)


def line_count(r: int, s: int, theta: int) -> int:
    """Planar lines meeting r generic lines and s generic points, with
    theta extra powers of the hyperplane class on the space of planes.

    Nonzero only when r + 2s + theta = 5, the dimension of the incidence
    variety; the vanishing is not special-cased but falls out of the ring
    grading.
    """
    return _incidence_count(LINE_RING, r, s, theta)


def conic_count(r: int, s: int, theta: int) -> int:
    """Planar conics meeting r generic lines and s generic points, with
    theta extra hyperplane-class powers; nonzero only when
    r + 2s + theta = 8."""
    return _incidence_count(CONIC_RING, r, s, theta)
