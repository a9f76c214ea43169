"""Staircase algebra for monomial ideals of k[x_1, ..., x_n].

A monomial ideal is identified with the up-set of its minimal exponent
vectors in N^n.  Everything here is exact integer arithmetic; the Newton
polytope side lives in :mod:`monideal.newton`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    DomainError,
    ResourceLimitError,
    UnsupportedIdealError,
)

ExponentVector = tuple[int, ...]

# exponents must fit a signed 32-bit machine word
MAX_EXPONENT = 2**31 - 1


@dataclass(frozen=True)
class Limits:
    """Size caps enforced on user-supplied ideals and box enumerations.

    The soft caps can be raised by passing a custom instance; the hard
    bounds cannot be exceeded at all.
    """

    max_dim: int = 6
    max_gens: int = 32
    max_box_points: int = 4_000_000

    HARD_MAX_DIM = 10
    HARD_MAX_GENS = 4096
    HARD_MAX_BOX_POINTS = 50_000_000

    def __post_init__(self):
        if not 1 <= self.max_dim <= self.HARD_MAX_DIM:
            raise ResourceLimitError(f"max_dim must lie in [1, {self.HARD_MAX_DIM}]")
        if not 1 <= self.max_gens <= self.HARD_MAX_GENS:
            raise ResourceLimitError(f"max_gens must lie in [1, {self.HARD_MAX_GENS}]")
        if not 1 <= self.max_box_points <= self.HARD_MAX_BOX_POINTS:
            raise ResourceLimitError(
                f"max_box_points must lie in [1, {self.HARD_MAX_BOX_POINTS}]"
            )


DEFAULT_LIMITS = Limits()
# derived ideals (products, powers, closures) are only bounded by the hard caps
_DERIVED_LIMITS = Limits(
    max_dim=Limits.HARD_MAX_DIM,
    max_gens=Limits.HARD_MAX_GENS,
    max_box_points=Limits.HARD_MAX_BOX_POINTS,
)


def _check_vector(v, n: int | None = None) -> ExponentVector:
    v = tuple(int(x) for x in v)
    if n is not None and len(v) != n:
        raise DimensionMismatchError(f"expected a vector of length {n}, got {len(v)}")
    for x in v:
        if x < 0:
            raise DomainError(f"exponents must be natural numbers, got {x}")
        if x > MAX_EXPONENT:
            raise ResourceLimitError(f"exponent {x} overflows the machine word")
    return v


def minimalize(vectors: Iterable[Sequence[int]]) -> frozenset[ExponentVector]:
    """Componentwise-minimal antichain generating the same up-set of N^n."""
    vecs = {tuple(int(x) for x in v) for v in vectors}
    if not vecs:
        return frozenset()
    dims = {len(v) for v in vecs}
    if len(dims) != 1:
        raise DimensionMismatchError(f"mixed dimensions {sorted(dims)}")
    # a dominating vector has strictly larger degree, so degree order suffices
    kept: list[ExponentVector] = []
    for v in sorted(vecs, key=lambda t: (sum(t), t)):
        if not any(all(k <= x for k, x in zip(w, v)) for w in kept):
            kept.append(v)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    The constructor minimalizes its input.  The zero vector as the sole
    generator encodes the unit ideal R.
    """

    n: int
    gens: tuple[ExponentVector, ...]
    limits: Limits = field(default=DEFAULT_LIMITS, compare=False, repr=False)

    def __init__(self, n: int, gens: Iterable[Sequence[int]], limits: Limits = DEFAULT_LIMITS):
        n = int(n)
        if n < 1:
            raise DomainError("dimension must be at least 1")
        if n > limits.max_dim:
            raise ResourceLimitError(f"dimension {n} exceeds the cap {limits.max_dim}")
        vecs = [_check_vector(g, n) for g in gens]
        if not vecs:
            raise DomainError("an ideal needs at least one generator")
        mins = sorted(minimalize(vecs), reverse=True)
        if len(mins) > limits.max_gens:
            raise ResourceLimitError(
                f"{len(mins)} minimal generators exceed the cap {limits.max_gens}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(mins))
        object.__setattr__(self, "limits", limits)

    @classmethod
    def _derived(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(n, gens, limits=_DERIVED_LIMITS)

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @classmethod
    def pure_powers(cls, exponents: Sequence[int]) -> "MonomialIdeal":
        n = len(exponents)
        return cls(n, [tuple(a if i == j else 0 for j in range(n)) for i, a in enumerate(exponents)])

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, r: int) -> "MonomialIdeal":
        return power(self, r)

    def __str__(self) -> str:
        from .parse import format_ideal

        return format_ideal(self)


def max_ideal_power(n: int, d: int) -> MonomialIdeal:
    """m^d: all exponent vectors of degree d (unit ideal for d = 0)."""
    if d < 0:
        raise DomainError("power must be non-negative")
    return MonomialIdeal._derived(n, _compositions(n, d))


def _compositions(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


def _same_dim(a: MonomialIdeal, b: MonomialIdeal):
    if a.n != b.n:
        raise DimensionMismatchError(f"dimensions {a.n} and {b.n} differ")


def contains(a: MonomialIdeal, u: Sequence[int]) -> bool:
    """True iff x^u lies in a."""
    if len(u) != a.n:
        raise DimensionMismatchError(f"vector of length {len(u)} for an ideal in {a.n} variables")
    return any(all(x >= g for x, g in zip(u, gen)) for gen in a.gens)


def ideal_contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True iff b is a subset of a (checked generator by generator)."""
    _same_dim(a, b)
    return all(contains(a, g) for g in b.gens)


def is_m_primary(a: MonomialIdeal) -> bool:
    if a.is_unit:
        return True
    return all(
        any(g[i] > 0 and sum(g) == g[i] for g in a.gens) for i in range(a.n)
    )


def _require_primary(a: MonomialIdeal):
    if not is_m_primary(a):
        raise UnsupportedIdealError("ideal is not m-primary")


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_dim(a, b)
    sums = {tuple(x + y for x, y in zip(g, h)) for g in a.gens for h in b.gens}
    return MonomialIdeal._derived(a.n, sums)


def power(a: MonomialIdeal, r: int) -> MonomialIdeal:
    if r < 0:
        raise DomainError("power must be non-negative")
    result = MonomialIdeal._derived(a.n, [(0,) * a.n])
    base = a
    # square-and-multiply keeps intermediate generator sets small
    while r:
        if r & 1:
            result = product(result, base)
        r >>= 1
        if r:
            base = product(base, base)
    return result


def pure_power_exponents(a: MonomialIdeal) -> tuple[int, ...]:
    """Minimal a_i with x_i^{a_i} in a, for each axis."""
    _require_primary(a)
    if a.is_unit:
        return (0,) * a.n
    return tuple(
        min(g[i] for g in a.gens if g[i] > 0 and sum(g) == g[i]) for i in range(a.n)
    )


def order(a: MonomialIdeal) -> int:
    """Largest t with a contained in m^t (0 for the unit ideal)."""
    return min(sum(g) for g in a.gens)


def _box_guard(shape: Sequence[int], limits: Limits):
    size = math.prod(shape)
    if size > limits.max_box_points:
        raise ResourceLimitError(
            f"enumeration box {tuple(shape)} has {size} points, cap is {limits.max_box_points}"
        )


def membership_grid(a: MonomialIdeal, shape: Sequence[int]) -> np.ndarray:
    """Boolean array over the box prod [0, shape_i): True where x^u is in a."""
    shape = tuple(int(s) for s in shape)
    grid = np.zeros(shape, dtype=bool)
    for g in a.gens:
        if all(x < s for x, s in zip(g, shape)):
            grid[tuple(slice(x, None) for x in g)] = True
    return grid


def grid_minimal_points(mask: np.ndarray) -> list[ExponentVector]:
    """Minimal elements of an up-set restricted to a box, given as a boolean mask."""
    minimal = mask.copy()
    for axis in range(mask.ndim):
        below = np.zeros_like(mask)
        dst = [slice(None)] * mask.ndim
        src = [slice(None)] * mask.ndim
        dst[axis] = slice(1, None)
        src[axis] = slice(None, -1)
        below[tuple(dst)] = mask[tuple(src)]
        minimal &= ~below
    return [tuple(int(x) for x in p) for p in np.argwhere(minimal)]


@lru_cache(maxsize=4096)
def colength(a: MonomialIdeal) -> int:
    """length(R/a): the number of standard monomials outside a."""
    _require_primary(a)
    if a.is_unit:
        return 0
    box = pure_power_exponents(a)
    _box_guard(box, a.limits)
    return int((~membership_grid(a, box)).sum())


def standard_monomials(a: MonomialIdeal) -> list[ExponentVector]:
    _require_primary(a)
    if a.is_unit:
        return []
    box = pure_power_exponents(a)
    _box_guard(box, a.limits)
    return [tuple(int(x) for x in p) for p in np.argwhere(~membership_grid(a, box))]
