"""
Falsification sweep
===================

Length and multiplicity bounds checked over a seeded family of random
m-primary ideals.  Every VIOLATED verdict would be a bug in this code.
"""
from fractions import Fraction

from monideal.harness import SweepConfig, check_mult_bound, sweep
from monideal import max_ideal_power

config = SweepConfig(dims=(2, 3), count=60, seed=11)
doc = sweep(config)
print("summary:", doc.summary)

# how tight do the bounds get?  smallest e(a) c^n / (n+k)^n over the sweep
tight = [r for r in doc.reports if r.name == "mult_bound" and r.quantities.get("k") is not None]
best = min(tight, key=lambda r: r.quantities["multiplicity"] / r.quantities["bound"])
print("tightest:", best.ideal, "c =", best.c, "e =", best.quantities["multiplicity"],
      "bound =", best.quantities["bound"])

# the equality family m^d, c = (n+k)/d
for n, d, k in [(2, 3, 1), (3, 2, 1), (3, 4, 3)]:
    r = check_mult_bound(max_ideal_power(n, d), Fraction(n + k, d))
    print(f"m^{d} in n={n}, c={Fraction(n + k, d)}: {r.verdict.value}")
