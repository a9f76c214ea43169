"""Newton polytope engine.

For an m-primary monomial ideal with generators G the Newton polytope is
P(a) = conv(G) + R^n_+.  Its facets other than the coordinate hyperplanes
have strictly positive normals v normalised by v.u >= 1, and these normals
are exactly the vertices of the blocking polyhedron

    D = { b >= 0 : b.g >= 1 for every g in G }.

Membership, interior tests, integral closure, the log canonical threshold
and the complement volume are all read off the same :class:`DualNormalSet`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from . import _linalg
from .errors import DomainError, InternalConsistencyError, UnsupportedIdealError
from .lattice import (
    MonomialIdeal,
    _box_guard,
    _require_primary,
    grid_minimal_points,
    pure_power_exponents,
)


class RegionClass(enum.Enum):
    OUTSIDE = "Outside"
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class Facet:
    """One non-coordinate facet of P(a): the half-space weights.u >= rhs.

    ``weights`` is a primitive positive integer vector, so the rational
    normal is ``weights / rhs``.  ``tight`` lists the generators on the facet.
    """

    weights: tuple[int, ...]
    rhs: int
    tight: tuple[tuple[int, ...], ...]

    @property
    def normal(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, self.rhs) for w in self.weights)

    def value(self, u: Sequence) -> Fraction:
        """v.u for the rational normal v."""
        return Fraction(_linalg.dot(self.weights, u)) / self.rhs


@dataclass(frozen=True)
class DualNormalSet:
    n: int
    facets: tuple[Facet, ...]

    @property
    def normals(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(f.normal for f in self.facets)

    def __len__(self):
        return len(self.facets)

    def contains(self, u: Sequence) -> bool:
        """u in P(a), via u >= 0 and v.u >= 1 for every normal."""
        if any(x < 0 for x in u):
            return False
        return all(_linalg.dot(f.weights, u) >= f.rhs for f in self.facets)


def _check_c(c) -> Fraction:
    c = Fraction(c)
    if c <= 0:
        raise DomainError(f"scale c must be positive, got {c}")
    return c


def _require_proper_primary(a: MonomialIdeal):
    _require_primary(a)
    if a.is_unit:
        raise UnsupportedIdealError("the unit ideal has no Newton polytope facets")


# -- vertex enumeration of the blocking polyhedron ---------------------------------


def _double_description(n: int, gens: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Vertices of D via the double description method on its homogenisation.

    The cone { (b, s) : b >= 0, s >= 0, b.g >= s } is built up one
    generator constraint at a time; extreme rays with s > 0 are the
    vertices b/s of D.  Exact integer arithmetic throughout.
    """
    d = n + 1
    rows: list[tuple[int, ...]] = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    full = (1 << d) - 1
    rays: list[tuple[tuple[int, ...], int]] = [(rows[i], full & ~(1 << i)) for i in range(d)]
    for g in gens:
        row = tuple(g) + (-1,)
        k = len(rows)
        rows.append(row)
        vals = [_linalg.dot(row, r) for r, _ in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        new_rays = [(rays[i][0], rays[i][1] | (1 << k) if vals[i] == 0 else rays[i][1])
                    for i, v in enumerate(vals) if v >= 0]
        for p in pos:
            zp = rays[p][1]
            for q in neg:
                common = zp & rays[q][1]
                if bin(common).count("1") < d - 2:
                    continue
                # combinatorial adjacency: no third ray's zero set contains the common one
                if any(
                    (z & common) == common for j, (_, z) in enumerate(rays) if j != p and j != q
                ):
                    continue
                rp, rq = rays[p][0], rays[q][0]
                vp, vq = vals[p], vals[q]
                ray = _linalg.primitive(tuple(vp * y - vq * x for x, y in zip(rp, rq)))
                new_rays.append((ray, common | (1 << k)))
        rays = new_rays
    out = set()
    for ray, _ in rays:
        if ray[-1] > 0:
            out.add((ray[:-1], ray[-1]))
    return sorted(out)


def _exhaustive(n: int, gens: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Vertices of D by solving every n-subset of the tight-constraint system.

    Constraints are b.g = 1 for each generator and b_i = 0 for each axis;
    singular subsystems are skipped and infeasible solutions discarded.
    """
    constraints = [(tuple(g), 1) for g in gens]
    constraints += [(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
    out = set()
    for subset in combinations(constraints, n):
        b = _linalg.solve([r for r, _ in subset], [h for _, h in subset])
        if b is None or any(x < 0 for x in b):
            continue
        if all(_linalg.dot(b, g) >= 1 for g in gens):
            den = math.lcm(*(x.denominator for x in b))
            w = tuple(int(x * den) for x in b)
            g0 = math.gcd(*w, den)
            out.add((tuple(x // g0 for x in w), den // g0))
    return sorted(out)


def _prune(gens, candidates) -> list[Facet]:
    """Keep only normals that cut out a facet, each certified by a witness point.

    The witness for a normal is the centroid of its tight generators pulled
    slightly towards the origin: it violates that normal but no other.
    """
    facets = [
        Facet(w, t, tuple(g for g in gens if _linalg.dot(w, g) == t)) for w, t in candidates
    ]
    kept = []
    for f in facets:
        if not f.tight:
            continue
        x = [Fraction(sum(col), len(f.tight)) for col in zip(*f.tight)]
        others = [h for h in facets if h is not f]
        ratios = [Fraction(_linalg.dot(h.weights, x)) / h.rhs for h in others]
        if any(r <= 1 for r in ratios):
            continue
        # (1 - eps) x lies strictly inside every other half-space
        eps = min((Fraction(r - 1, 2 * r) for r in ratios), default=Fraction(1, 2))
        witness = [(1 - eps) * xi for xi in x]
        if _linalg.dot(f.weights, witness) >= f.rhs:
            raise InternalConsistencyError("witness point failed to separate a facet")
        kept.append(f)
    return kept


@lru_cache(maxsize=4096)
def dual_normals(a: MonomialIdeal, method: str = "dd") -> DualNormalSet:
    """Facet normals of P(a) as the vertices of its blocking polyhedron.

    ``method="dd"`` uses double description; ``method="exhaustive"``
    solves every n-subset of constraints and is kept as a brute-force
    cross-check for small inputs.
    """
    _require_proper_primary(a)
    if method == "dd":
        cands = _double_description(a.n, a.gens)
    elif method == "exhaustive":
        cands = _exhaustive(a.n, a.gens)
    else:
        raise ValueError(f"unknown method {method!r}")
    facets = _prune(a.gens, cands)
    p = pure_power_exponents(a)
    for f in facets:
        # v_i >= 1/p_i, forced by x_i^{p_i} in a
        if any(w * pi < f.rhs for w, pi in zip(f.weights, p)):
            raise InternalConsistencyError(f"normal {f.normal} violates the pure-power bound")
    facets.sort(key=lambda f: f.normal)
    return DualNormalSet(a.n, tuple(facets))


def classify(a: MonomialIdeal, u: Sequence, c=1) -> RegionClass:
    """Position of the rational point u relative to c * P(a)."""
    c = _check_c(c)
    if len(u) != a.n:
        raise DomainError(f"point of length {len(u)} for an ideal in {a.n} variables")
    u = [Fraction(x) for x in u]
    if a.is_unit:
        # P(R) is the whole orthant
        if any(x < 0 for x in u):
            return RegionClass.OUTSIDE
        return RegionClass.INTERIOR if all(x > 0 for x in u) else RegionClass.BOUNDARY
    dual = dual_normals(a)
    values = [f.value(u) for f in dual.facets]
    if any(x < 0 for x in u) or any(v < c for v in values):
        return RegionClass.OUTSIDE
    if all(x > 0 for x in u) and all(v > c for v in values):
        return RegionClass.INTERIOR
    return RegionClass.BOUNDARY


def facet_values(dual: DualNormalSet, shape: Sequence[int], offset: int = 0) -> np.ndarray:
    """Integer array (facets, *shape) of weights.(u + offset*e) over a box."""
    shape = tuple(shape)
    top = max(shape) + offset
    bound = max(sum(f.weights) for f in dual.facets) * top
    dtype = np.int64 if bound < 2**62 else object
    idx = np.indices(shape, dtype=dtype) + offset
    W = np.array([f.weights for f in dual.facets], dtype=dtype)
    return np.tensordot(W, idx, axes=(1, 0))


def integral_closure(a: MonomialIdeal) -> MonomialIdeal:
    """Ideal of the lattice points of P(a)."""
    _require_primary(a)
    if a.is_unit:
        return a
    dual = dual_normals(a)
    shape = tuple(p + 1 for p in pure_power_exponents(a))
    _box_guard(shape, a.limits)
    vals = facet_values(dual, shape)
    rhs = np.array([f.rhs for f in dual.facets]).reshape((-1,) + (1,) * a.n)
    inside = np.all(vals >= rhs, axis=0)
    return MonomialIdeal._derived(a.n, grid_minimal_points(inside))


def lct(a: MonomialIdeal) -> Fraction:
    """Log canonical threshold: min over normals v of v.(1, ..., 1)."""
    _require_primary(a)
    if a.is_unit:
        raise DomainError("the unit ideal has no log canonical threshold")
    return min(Fraction(sum(f.weights), f.rhs) for f in dual_normals(a).facets)


# -- exact volume ------------------------------------------------------------------


def _facets_of(points: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], frozenset[int]]]:
    """Facets of the full-dimensional hull of integer points, by brute force."""
    d = len(points[0])
    seen: dict[frozenset[int], tuple[int, ...]] = {}
    for subset in combinations(range(len(points)), d):
        h = _linalg.hyperplane_normal([points[i] for i in subset])
        if not any(h):
            continue
        off = _linalg.dot(h, points[subset[0]])
        side = [_linalg.dot(h, p) - off for p in points]
        if all(s >= 0 for s in side) or all(s <= 0 for s in side):
            on = frozenset(i for i, s in enumerate(side) if s == 0)
            seen.setdefault(on, h)
    return [(h, on) for on, h in seen.items()]


def triangulate(points: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Pulling triangulation of the hull of full-dimensional integer points.

    Returns index tuples of d+1 points.  Facets are lowered one dimension
    by dropping a coordinate on which their normal is non-zero, which is
    an injective affine map on the facet hyperplane.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    d = len(pts[0])
    if d == 0:
        return [(0,)]
    if d == 1:
        lo = min(range(len(pts)), key=lambda i: pts[i][0])
        hi = max(range(len(pts)), key=lambda i: pts[i][0])
        return [(lo, hi)] if pts[lo] != pts[hi] else []
    apex = 0
    out = []
    for h, on in _facets_of(pts):
        if apex in on:
            continue
        idx = sorted(on)
        drop = next(j for j, x in enumerate(h) if x != 0)
        sub = [tuple(x for j, x in enumerate(pts[i]) if j != drop) for i in idx]
        for simplex in triangulate(sub):
            out.append((apex,) + tuple(idx[s] for s in simplex))
    return out


def facet_simplices(facet: Facet) -> list[tuple[tuple[int, ...], ...]]:
    """Triangulation of a bounded facet into (n-1)-simplices of generators."""
    pts = list(facet.tight)
    n = len(pts[0])
    drop = next(j for j, w in enumerate(facet.weights) if w != 0)
    proj = [tuple(x for j, x in enumerate(p) if j != drop) for p in pts]
    if n == 1:
        return [(pts[0],)]
    return [tuple(pts[i] for i in s) for s in triangulate(proj)]


@lru_cache(maxsize=4096)
def complement_volume(a: MonomialIdeal) -> Fraction:
    """Exact Vol(R^n_+ minus P(a)) as a sum of pyramids from the origin.

    Each bounded facet is triangulated and every simplex (g_1, ..., g_n)
    contributes |det(g_1, ..., g_n)| / n!.
    """
    _require_proper_primary(a)
    total = 0
    for f in dual_normals(a).facets:
        for simplex in facet_simplices(f):
            total += abs(_linalg.det_int(simplex))
    return Fraction(total, math.factorial(a.n))


def multiplicity(a: MonomialIdeal) -> int:
    """Samuel multiplicity e(a) = n! Vol(R^n_+ minus P(a))."""
    e = complement_volume(a) * math.factorial(a.n)
    if e.denominator != 1:
        raise InternalConsistencyError(f"n! * volume = {e} is not an integer")
    return int(e)


def scaled_multiplicity(a: MonomialIdeal, c) -> Fraction:
    """e(a^c) := c^n e(a) for rational c > 0."""
    c = _check_c(c)
    return c**a.n * multiplicity(a)


def monte_carlo_volume(a: MonomialIdeal, samples: int = 1_000_000, seed: int = 0) -> float:
    """Monte Carlo estimate of Vol(R^n_+ minus P(a)); a test oracle only.

    Points are drawn uniformly from the continuous staircase (the union of
    unit cubes at standard monomials), which contains the complement of
    P(a) and is much tighter than the bounding box.
    """
    from .lattice import standard_monomials

    _require_proper_primary(a)
    rng = np.random.default_rng(seed)
    cells = np.array(standard_monomials(a), dtype=float)
    dual = dual_normals(a)
    W = np.array([f.weights for f in dual.facets], dtype=float)
    rhs = np.array([f.rhs for f in dual.facets], dtype=float)
    hits = 0
    chunk = 200_000
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        pts = cells[rng.integers(len(cells), size=m)] + rng.random((m, a.n))
        outside = np.any(pts @ W.T < rhs, axis=1)
        hits += int(outside.sum())
        done += m
    return hits / samples * len(cells)
