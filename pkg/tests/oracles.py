"""Brute-force oracles that share no code path with the implementation."""
from fractions import Fraction
from itertools import combinations, product as cartesian
from math import comb

from monideal._linalg import solve


def in_newton_polytope(gens, u) -> bool:
    """u in conv(gens) + R^n_+, by enumerating basic solutions of

        sum_j lam_j g_j + s = u,  sum_j lam_j = 1,  lam, s >= 0.
    """
    n = len(u)
    cols = [list(g) + [1] for g in gens]
    cols += [[int(i == j) for j in range(n)] + [0] for i in range(n)]
    rhs = [Fraction(x) for x in u] + [Fraction(1)]
    for basis in combinations(range(len(cols)), n + 1):
        rows = [[cols[b][i] for b in basis] for i in range(n + 1)]
        x = solve(rows, rhs)
        if x is not None and all(v >= 0 for v in x):
            return True
    return False


def in_interior(gens, u, c=1, delta=Fraction(1, 10**6)) -> bool:
    """u in Int(c P): all coordinates positive and u/c - delta*e still in P.

    Lattice-point margins are far larger than delta for the small inputs
    the tests use.
    """
    c = Fraction(c)
    if any(x <= 0 for x in u):
        return False
    return in_newton_polytope(gens, [Fraction(x) / c - delta for x in u])


def staircase_count(gens, box) -> int:
    """Lattice points of the box outside the up-set of gens."""
    return sum(
        1
        for u in cartesian(*(range(b) for b in box))
        if not any(all(x >= g for x, g in zip(u, gen)) for gen in gens)
    )


def minimal_points(points):
    pts = set(map(tuple, points))
    return {p for p in pts if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts)}


def howald_brute_force(gens, c, box):
    """Minimal u in the box with u + e in Int(c P), via the LP oracle."""
    hits = [u for u in cartesian(*(range(b + 1) for b in box)) if in_interior(gens, [x + 1 for x in u], c)]
    return minimal_points(hits)


def colength_m_power(n: int, d: int) -> int:
    return comb(n + d - 1, n)
