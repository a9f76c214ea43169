"""Multiplier ideals of monomial ideals by Howald's criterion.

x^u lies in I(a^c) iff u + (1, ..., 1) is in the interior of c * P(a).
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import InternalConsistencyError
from .lattice import (
    MonomialIdeal,
    _box_guard,
    _require_primary,
    grid_minimal_points,
    order,
    pure_power_exponents,
)
from .newton import RegionClass, _check_c, classify, dual_normals, facet_values


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def multiplier_ideal(a: MonomialIdeal, c) -> MonomialIdeal:
    """I(a^c), enumerated over the box prod [0, ceil(c * p_i)].

    Minimal generators never leave that box because every pure power
    x_i^{ceil(c p_i)} already satisfies the criterion; this is re-checked
    at run time.
    """
    c = _check_c(c)
    _require_primary(a)
    n = a.n
    if a.is_unit:
        return MonomialIdeal.unit(n)
    dual = dual_normals(a)
    tops = [_ceil(c * p) for p in pure_power_exponents(a)]
    for i, t in enumerate(tops):
        corner = [1] * n
        corner[i] += t
        if classify(a, corner, c) is not RegionClass.INTERIOR:
            raise InternalConsistencyError(f"pure power x_{i + 1}^{t} failed the search-box test")
    shape = tuple(t + 1 for t in tops)
    _box_guard(shape, a.limits)
    # weights.(u + e) * den > rhs * num  <=>  v.(u + e) > c
    vals = facet_values(dual, shape, offset=1) * c.denominator
    rhs = np.array([f.rhs * c.numerator for f in dual.facets], dtype=object)
    rhs = rhs.astype(vals.dtype).reshape((-1,) + (1,) * n)
    interior = np.all(vals > rhs, axis=0)
    return MonomialIdeal._derived(n, grid_minimal_points(interior))


def test_ideal_monomial(a: MonomialIdeal, c) -> MonomialIdeal:
    """tau(a^c) for a monomial ideal in positive characteristic.

    For monomial ideals the generalized test ideal coincides with the
    multiplier ideal, so this is an alias of :func:`multiplier_ideal`.
    """
    return multiplier_ideal(a, c)


# keep pytest from collecting the alias as a test function
test_ideal_monomial.__test__ = False


def k_level(a: MonomialIdeal, c) -> int | None:
    """Largest k >= 0 with I(a^c) inside m^{k+1}; None when I(a^c) = R."""
    J = multiplier_ideal(a, c)
    if J.is_unit:
        return None
    return order(J) - 1

