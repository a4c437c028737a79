"""Independent naive model of the quotient ring arithmetic (tests only).

Elements are sparse ``{(l_exp, a_exp): coeff}`` dicts, products are
formed in the free polynomial ring, and reduction substitutes the fiber
relation one monomial at a time in whatever order the dict yields,
truncating high a-powers only at the very end.  Same mathematics as
``planarcount.quotient_ring``, deliberately different data layout,
traversal order and truncation timing, so agreement between the two is
informative.
"""

from __future__ import annotations

import random

from planarcount.quotient_ring import RingElement, RingSpec, from_terms

Terms = dict[tuple[int, int], int]


def free_mul(x: Terms, y: Terms) -> Terms:
    out: Terms = {}
    for (i, j), cx in x.items():
        for (k, n), cy in y.items():
            key = (i + k, j + n)
            out[key] = out.get(key, 0) + cx * cy
    return out


def naive_reduce(terms: Terms, spec: RingSpec) -> Terms:
    """Substitute the fiber relation until every l-exponent is in range,
    then truncate a-exponents past 3.

    Late truncation is sound because reduction never lowers an
    a-exponent, so over-truncated monomials cannot flow back.
    """
    m = spec.fiber_degree
    work = {key: c for key, c in terms.items() if c}
    while True:
        key = next((k for k in work if k[0] >= m), None)
        if key is None:
            break
        i, j = key
        c = work.pop(key)
        for offset, rel_coeff in enumerate(spec.relation, start=1):
            if rel_coeff == 0:
                continue
            target = (i - offset, j + offset)
            updated = work.get(target, 0) - rel_coeff * c
            if updated:
                work[target] = updated
            else:
                work.pop(target, None)
    return {(i, j): c for (i, j), c in work.items() if j <= 3 and c}


def as_terms(element: RingElement) -> Terms:
    return {
        (i, j): c
        for i, row in enumerate(element.coeffs)
        for j, c in enumerate(row)
        if c
    }


def random_reduced(rng: random.Random, spec: RingSpec) -> RingElement:
    grid = {
        (i, j): rng.randint(-9, 9)
        for i in range(spec.fiber_degree)
        for j in range(4)
    }
    return from_terms(spec, grid)


def random_raw_terms(rng: random.Random, spec: RingSpec) -> Terms:
    """Unreduced sparse terms, l-exponents up to twice the fiber degree."""
    terms: Terms = {}
    for _ in range(rng.randint(1, 12)):
        key = (rng.randint(0, 2 * spec.fiber_degree), rng.randint(0, 5))
        terms[key] = terms.get(key, 0) + rng.randint(-9, 9)
    return terms
