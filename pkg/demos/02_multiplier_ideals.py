"""
Multiplier ideals of monomial ideals
====================================

x^u lies in I(a^c) exactly when u + (1,...,1) is in the interior of c P(a).
Walk c upwards and watch the ideal shrink at its jumping points.
"""
from fractions import Fraction

from monideal import format_ideal, lct, multiplier_ideal, parse_ideal
from monideal.multiplier import k_level

a = parse_ideal("(x^2, y^3)")
print("a =", a, " lct =", lct(a))

prev = None
for step in range(1, 21):
    c = Fraction(step, 6)
    J = multiplier_ideal(a, c)
    if J != prev:
        print(f"c = {str(c):>5}:  I(a^c) = {format_ideal(J):<32} k = {k_level(a, c)}")
        prev = J

# the golden ideal: I(a) is the maximal ideal
b = parse_ideal("(x^5, y^4, z^2)")
print(b, "-> I(a) =", multiplier_ideal(b, 1))
