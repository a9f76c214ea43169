"""Numeric laboratory for the symmetrisation argument behind the length bound.

The complement of a Newton polytope is star-shaped from the origin, so it
is described by its boundary radius r(theta) along each direction of the
open orthant.  Averaging the radii of all coordinate permutations of
c * P(a) gives the symmetrised region Q; this module samples those radii,
integrates complement volumes in spherical coordinates, and runs the
exact proof gadgets (the u_J points, the hyperplane H and the function
f(a) with its constants K_i).

Floating point is used here and nowhere else in the package.  Every
numeric check states its tolerance and seed in the report it returns.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .errors import ConfigError, DomainError
from .lattice import MonomialIdeal
from .multiplier import k_level
from .newton import RegionClass, _check_c, classify, complement_volume, dual_normals
from .reports import CheckReport, Verdict

HALF_PI = math.pi / 2


def direction(theta) -> np.ndarray:
    """Unit vector with spherical angles theta = (theta_1, ..., theta_{n-1}).

    u_1 = prod cos(theta_j), u_i = sin(theta_{i-1}) prod_{j >= i} cos(theta_j);
    the volume element is rho^{n-1} prod cos(theta_i)^{i-1}.
    Works elementwise on arrays of shape (..., n-1).
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    m = theta.shape[-1]
    cos, sin = np.cos(theta), np.sin(theta)
    comps = [np.prod(cos, axis=-1)]
    for i in range(1, m + 1):
        comps.append(sin[..., i - 1] * np.prod(cos[..., i:], axis=-1))
    return np.stack(comps, axis=-1)


def jacobian(theta) -> np.ndarray:
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    J = np.ones(theta.shape[:-1])
    for i in range(theta.shape[-1]):
        J = J * np.cos(theta[..., i]) ** i
    return J


def _permuted_normals(a: MonomialIdeal, sigma: Sequence[int]) -> np.ndarray:
    # sigma sends coordinate i to sigma[i]; normals of sigma P move the same way
    V = np.array([[float(x) for x in v] for v in dual_normals(a).normals])
    out = np.empty_like(V)
    out[:, list(sigma)] = V
    return out


def _radius(normals: np.ndarray, c: float, dirs: np.ndarray) -> np.ndarray:
    # the ray rho*d enters {v.u >= c for all v} at rho = max_v c / (v.d)
    return c / np.min(dirs @ normals.T, axis=-1)


def _check_open(theta):
    t = np.atleast_1d(np.asarray(theta, dtype=float))
    if np.any(t <= 0) or np.any(t >= HALF_PI):
        raise DomainError("direction must lie strictly inside the open orthant")


def boundary_radius(a: MonomialIdeal, c, sigma: Sequence[int], theta) -> float:
    """r_sigma(theta): distance from the origin to sigma(c P(a)) along theta."""
    c = _check_c(c)
    if a.n not in (2, 3):
        raise DomainError("radial sampling is limited to n in {2, 3}")
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if theta.shape != (a.n - 1,):
        raise DomainError(f"expected {a.n - 1} angles")
    _check_open(theta)
    d = direction(theta)
    return float(_radius(_permuted_normals(a, sigma), float(c), d[None, :])[0])


@dataclass
class RadialSample:
    """Radii r(theta) on a midpoint grid of [0, pi/2]^{n-1}."""

    n: int
    angles: tuple[np.ndarray, ...]
    radii: np.ndarray

    def __post_init__(self):
        if not np.all(np.isfinite(self.radii)) or np.any(self.radii <= 0):
            raise DomainError("radii must be finite and positive")
        for g in self.angles:
            if np.any(np.diff(g) <= 0):
                raise DomainError("angle grid must be strictly increasing")

    def mesh(self) -> np.ndarray:
        return _mesh(self.angles)

    def complement_volume(self) -> float:
        """Midpoint-rule value of the integral of r^n / n times the Jacobian."""
        cell = math.prod(HALF_PI / len(g) for g in self.angles)
        return float(np.sum(self.radii**self.n / self.n * jacobian(self.mesh())) * cell)


def _mesh(angles) -> np.ndarray:
    return np.stack(np.meshgrid(*angles, indexing="ij"), axis=-1)


def _grid(n: int, resolution: int) -> tuple[np.ndarray, ...]:
    if resolution < 8:
        raise ConfigError("resolution must be at least 8")
    g = (np.arange(resolution) + 0.5) * (HALF_PI / resolution)
    return tuple(g.copy() for _ in range(n - 1))


def _sigma_radii(a: MonomialIdeal, c, dirs: np.ndarray) -> np.ndarray:
    """Array (n!, ...) of r_sigma over the given directions."""
    return np.stack(
        [_radius(_permuted_normals(a, s), float(c), dirs) for s in permutations(range(a.n))]
    )


def radial_sample(a: MonomialIdeal, c, resolution: int, sigma: Sequence[int] | None = None) -> RadialSample:
    """Radii of sigma(c P(a)) itself on the grid (identity permutation by default)."""
    c = _check_c(c)
    if a.n not in (2, 3):
        raise DomainError("radial sampling is limited to n in {2, 3}")
    angles = _grid(a.n, resolution)
    sigma = tuple(range(a.n)) if sigma is None else tuple(sigma)
    radii = _radius(_permuted_normals(a, sigma), float(c), direction(_mesh(angles)))
    return RadialSample(a.n, angles, radii)


def symmetrized_Q(a: MonomialIdeal, c, resolution: int) -> RadialSample:
    """Radii of Q: the average over all permutations sigma of r_sigma(theta)."""
    c = _check_c(c)
    if a.n not in (2, 3):
        raise DomainError("radial sampling is limited to n in {2, 3}")
    angles = _grid(a.n, resolution)
    radii = _sigma_radii(a, c, direction(_mesh(angles))).mean(axis=0)
    return RadialSample(a.n, angles, radii)


def _q_radius_at(a: MonomialIdeal, c, points: np.ndarray) -> np.ndarray:
    dirs = points / np.linalg.norm(points, axis=-1, keepdims=True)
    return _sigma_radii(a, c, dirs).mean(axis=0)


def lemma_Q_check(
    a: MonomialIdeal,
    c=1,
    resolution: int = 512,
    tol: float = 1e-6,
    convexity_tol: float = 1e-6,
    pairs: int = 2000,
    seed: int = 0,
) -> CheckReport:
    """Compare complement volumes of Q and c P(a), and sample convexity of Q.

    The volume of the complement of c P(a) is integrated as the average
    over permutations of the r_sigma^n integrals (each permuted copy has
    the same complement volume), which is the form the power-mean step
    compares against.
    """
    c = _check_c(c)
    n = a.n
    q = symmetrized_Q(a, c, resolution)
    mesh = q.mesh()
    dirs = direction(mesh)
    rs = _sigma_radii(a, c, dirs)
    cell = math.prod(HALF_PI / len(g) for g in q.angles)
    J = jacobian(mesh)
    vol_q = float(np.sum(q.radii**n / n * J) * cell)
    vol_p = float(np.sum((rs**n).mean(axis=0) / n * J) * cell)
    vol_p_identity = float(np.sum(rs[0] ** n / n * J) * cell)
    exact = c**n * complement_volume(a)

    rng = np.random.default_rng(seed)
    th = rng.uniform(0.0, HALF_PI, size=(2, pairs, n - 1))
    th = np.clip(th, 1e-9, HALF_PI - 1e-9)
    ends = [_q_radius_at(a, c, direction(t))[:, None] * direction(t) for t in th]
    worst = 0.0
    worst_at = None
    for t in (0.25, 0.5, 0.75):
        pts = (1 - t) * ends[0] + t * ends[1]
        rho = np.linalg.norm(pts, axis=-1)
        need = _q_radius_at(a, c, pts)
        deficit = (need - rho) / need
        i = int(np.argmax(deficit))
        if deficit[i] > worst:
            worst, worst_at = float(deficit[i]), pts[i].tolist()

    quantities = {
        "resolution": resolution,
        "tolerance": tol,
        "convexity_tolerance": convexity_tol,
        "seed": seed,
        "pairs": pairs,
        "vol_Q": vol_q,
        "vol_P": vol_p,
        "vol_P_identity": vol_p_identity,
        "vol_P_exact": exact,
        "convexity_max_deficit": worst,
    }
    witness = None
    if vol_q > vol_p * (1 + tol):
        witness = {"vol_Q": vol_q, "vol_P": vol_p}
    elif worst > convexity_tol:
        witness = {"nonconvex_point": worst_at, "relative_deficit": worst}
    verdict = Verdict.VIOLATED if witness else Verdict.HOLDS
    if verdict is Verdict.HOLDS and abs(vol_q - vol_p) <= 1e-9 * vol_p:
        verdict = Verdict.EQUALITY
    return CheckReport("lemma_Q", a, c, verdict, quantities, witness)


def power_mean_sides(n: int, values: Sequence) -> tuple[Fraction, Fraction]:
    """(d^{n-1} sum a_j^n, (sum a_j)^n) in exact rationals."""
    vals = [Fraction(v) for v in values]
    if not vals or any(v <= 0 for v in vals):
        raise DomainError("power-mean check needs positive values")
    if n < 1:
        raise DomainError("exponent must be a positive integer")
    d = len(vals)
    return d ** (n - 1) * sum(v**n for v in vals), sum(vals) ** n


def power_mean_check(n: int, values: Sequence) -> bool:
    lhs, rhs = power_mean_sides(n, values)
    return lhs >= rhs


def u_J_points(n: int, k: int) -> list[tuple[int, ...]]:
    """All u_J for |J| = r where k = nq + r: q+2 on J, q+1 elsewhere."""
    q, r = divmod(k, n)
    return [
        tuple(q + 2 if i in J else q + 1 for i in range(n)) for J in combinations(range(n), r)
    ]


def uJ_exclusion_check(a: MonomialIdeal, c) -> CheckReport:
    """Every u_J must miss the interior of c P(a) once I(a^c) lies in m^{k+1}."""
    c = _check_c(c)
    if a.n > 4:
        raise DomainError("u_J exclusion is run for n <= 4")
    k = k_level(a, c)
    if k is None:
        return CheckReport("uJ_exclusion", a, c, Verdict.NOT_APPLICABLE, {"k": None})
    q, r = divmod(k, a.n)
    points = u_J_points(a.n, k)
    classes = [classify(a, u, c) for u in points]
    bad = [list(u) for u, cl in zip(points, classes) if cl is RegionClass.INTERIOR]
    quantities = {
        "k": k,
        "q": q,
        "r": r,
        "points": [list(u) for u in points],
        "classes": [cl.value for cl in classes],
    }
    if bad:
        return CheckReport("uJ_exclusion", a, c, Verdict.VIOLATED, quantities, {"interior_u_J": bad})
    return CheckReport("uJ_exclusion", a, c, Verdict.HOLDS, quantities)


def hyperplane_b(n: int, r: int, q: int, a) -> Fraction:
    """b = a (n - r)(q + 1) / (a - r(q + 2)): H then passes through u_J."""
    a = Fraction(a)
    return a * (n - r) * (q + 1) / (a - r * (q + 2))


def H_volume_check(
    n: int, r: int, q: int, a_param, samples: int = 1_000_000, seed: int = 0, tol: float = 0.02
) -> CheckReport:
    """Corner simplex under H: closed form a^r b^{n-r} / n! against Monte Carlo.

    Also checks exactly that u_J lies on H, the value of H's left side
    along the diagonal, and (when a = n + k) that H meets the diagonal at
    ((n + k)/n) e.
    """
    if not 2 <= n <= 4 or not 0 <= r <= n - 1 or q < 0:
        raise DomainError("need 2 <= n <= 4, 0 <= r <= n-1 and q >= 0")
    a = Fraction(a_param)
    if a <= r * (q + 2):
        raise DomainError(f"a must exceed r(q+2) = {r * (q + 2)}")
    k = n * q + r
    b = hyperplane_b(n, r, q, a)
    coef = [1 / a] * r + [1 / b] * (n - r)
    closed = a**r * b ** (n - r) / math.factorial(n)

    problems = []
    uJ = [q + 2] * r + [q + 1] * (n - r)
    if sum(x * y for x, y in zip(coef, uJ)) != 1:
        problems.append("u_J not on H")
    diag = sum(coef)
    if diag != (1 - Fraction(r) / a) / (q + 1):
        problems.append("diagonal slope mismatch")
    crossing = 1 / diag
    if a == n + k and crossing != Fraction(n + k, n):
        problems.append("H misses ((n+k)/n) e")
    amgm = None
    if a <= n + k:
        amgm = a**r * b ** (n - r) >= (n + k) ** n
        if not amgm:
            problems.append("a^r b^(n-r) < (n+k)^n for a <= n+k")

    rng = np.random.default_rng(seed)
    legs = np.array([float(a)] * r + [float(b)] * (n - r))
    weights = np.array([float(x) for x in coef])
    inside = 0
    done = 0
    while done < samples:
        m = min(250_000, samples - done)
        pts = rng.random((m, n)) * legs
        inside += int(np.count_nonzero(pts @ weights <= 1.0))
        done += m
    estimate = inside / samples * float(np.prod(legs))
    rel = abs(estimate - float(closed)) / float(closed)
    if rel > tol:
        problems.append("Monte Carlo disagrees with the closed form")
    quantities = {
        "n": n, "r": r, "q": q, "k": k, "a": a, "b": b,
        "closed_form": closed, "monte_carlo": estimate, "relative_error": rel,
        "tolerance": tol, "samples": samples, "seed": seed,
        "diagonal_crossing": crossing, "amgm_bound": amgm,
    }
    if problems:
        return CheckReport("H_volume", None, None, Verdict.VIOLATED, quantities, problems)
    return CheckReport("H_volume", None, None, Verdict.HOLDS, quantities)


@dataclass
class ProofGadgetParams:
    n: int
    k: int
    grid: list[float] = field(default_factory=list)

    def __post_init__(self):
        if self.n < 1 or self.k < 0:
            raise DomainError("need n >= 1 and k >= 0")
        if not self.grid:
            lo = self.n + self.k
            self.grid = list(np.linspace(lo + 0.1, lo + 10, 100))

    @property
    def q(self) -> int:
        return self.k // self.n

    @property
    def r(self) -> int:
        return self.k % self.n


def K_constants(n: int, k: int) -> dict[int, Fraction]:
    """K_i = r(n-r)(q+1)/(i-r) - r(q+2) for r < i <= n."""
    q, r = divmod(k, n)
    return {
        i: Fraction(r * (n - r) * (q + 1), i - r) - r * (q + 2) for i in range(r + 1, n + 1)
    }


def f_exact(n: int, k: int, a) -> Fraction:
    """n! Vol(V cap H^-) as (1/n!) a^r prod (r/(a i) + (i-r)/(b i))^{-1}."""
    q, r = divmod(k, n)
    a = Fraction(a)
    b = hyperplane_b(n, r, q, a)
    out = a**r / math.factorial(n)
    for i in range(r + 1, n + 1):
        out /= Fraction(r) / (a * i) + Fraction(i - r) / (b * i)
    return out


def f_constant(n: int, k: int) -> Fraction:
    """The positive constant C with f(a) = C a^r prod a/(a + K_i)."""
    q, r = divmod(k, n)
    C = Fraction(1, math.factorial(n))
    for i in range(r + 1, n + 1):
        C *= Fraction(i * (n - r) * (q + 1), i - r)
    return C


def g_value(n: int, k: int, a: float, K: dict[int, Fraction] | None = None) -> float:
    """f(a) / C = a^r prod_{i > r} a / (a + K_i)."""
    r = k % n
    K = K_constants(n, k) if K is None else K
    out = a**r
    for Ki in K.values():
        out *= a / (a + float(Ki))
    return out


def f_monotonicity_check(params: ProofGadgetParams) -> CheckReport:
    n, k, q, r = params.n, params.k, params.q, params.r
    base = {"n": n, "k": k, "q": q, "r": r}
    if r == 0:
        base["note"] = "r = 0 is the divisible case; no f(a) gadget"
        return CheckReport("f_monotonicity", None, None, Verdict.NOT_APPLICABLE, base)
    K = K_constants(n, k)
    problems = []
    if K[n] != -r:
        problems.append(f"K_n = {K[n]} differs from -r")
    Ks = [K[i] for i in sorted(K)]
    if any(x <= y for x, y in zip(Ks, Ks[1:])):
        problems.append("K_i not strictly decreasing in i")

    lo = n + k
    C = f_constant(n, k)
    for a in (Fraction(lo), Fraction(lo + 1), Fraction(2 * lo + 5, 2)):
        g = a**r
        for Ki in Ks:
            g *= a / (a + Ki)
        if f_exact(n, k, a) != C * g:
            problems.append(f"f(a) != C g(a) at a = {a}")
    if f_exact(n, k, lo) != Fraction(lo**n, math.factorial(n)):
        problems.append("f(n+k) != (n+k)^n / n!")

    grid = [float(x) for x in params.grid]
    skipped = [x for x in grid if x <= lo]
    used = sorted(x for x in grid if x > lo)
    values = [g_value(n, k, x, K) for x in used]
    drops = [(used[i], used[i + 1]) for i in range(len(values) - 1) if values[i + 1] <= values[i]]
    if drops:
        problems.append({"non_increasing_between": drops[:5]})
    quantities = dict(
        base,
        K={str(i): K[i] for i in sorted(K)},
        C=C,
        f_at_n_plus_k=f_exact(n, k, lo),
        grid_points=len(used),
        skipped_grid_points=skipped,
        g_min=min(values) if values else None,
        g_max=max(values) if values else None,
    )
    if problems:
        return CheckReport("f_monotonicity", None, None, Verdict.VIOLATED, quantities, problems)
    return CheckReport("f_monotonicity", None, None, Verdict.HOLDS, quantities)
