"""
Newton polytopes, colength and multiplicity
===========================================

The staircase of a monomial ideal, the facets of its Newton polytope and
the exact volume of the region under it.
"""
from fractions import Fraction

from monideal import (
    colength,
    complement_volume,
    dual_normals,
    integral_closure,
    lct,
    multiplicity,
    parse_ideal,
    power,
)
from monideal.newton import monte_carlo_volume

a = parse_ideal("(x^2, x*y, y^3)")

# facet normals v with v.u >= 1 on the polytope
for v in dual_normals(a).normals:
    print("facet normal", tuple(str(x) for x in v))

# 4 standard monomials, but only 5/2 units of area below the polytope
print("length(R/a) =", colength(a))
print("Vol =", complement_volume(a), " e(a) = 2! Vol =", multiplicity(a))

# the Monte Carlo estimate is only a sanity check
print("Monte Carlo Vol ~", round(monte_carlo_volume(a, 200_000, seed=0), 4))

# the volume scales exactly with powers, the colength only asymptotically
for m in (1, 2, 4, 8, 16):
    ratio = Fraction(2 * colength(power(a, m)), m * m)
    print(f"m={m:2d}  2! length(R/a^m)/m^2 = {float(ratio):.4f}")

# lattice points of the polytope give the integral closure
b = parse_ideal("(x^5, y^4, z^2)")
print("closure of", b, "=", integral_closure(b))
print("lct =", lct(b))
