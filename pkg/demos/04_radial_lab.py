"""
Radial symmetrisation
=====================

Averaging the boundary radius of all coordinate permutations of P gives a
symmetric region Q whose complement is no larger than that of P.
"""
import numpy as np

from monideal import parse_ideal
from monideal.radial import (
    ProofGadgetParams,
    f_monotonicity_check,
    g_value,
    lemma_Q_check,
    radial_sample,
    symmetrized_Q,
)

a = parse_ideal("(x^2, y^5)")
p, q = radial_sample(a, 1, 256), symmetrized_Q(a, 1, 256)

# radii along a few directions
for i in (0, 64, 128, 192, 255):
    th = p.angles[0][i]
    print(f"theta={th:.3f}  r_P={p.radii[i]:.4f}  r_Q={q.radii[i]:.4f}")

rep = lemma_Q_check(a, 1, 512)
print({k: rep.quantities[k] for k in ("vol_Q", "vol_P", "convexity_max_deficit")})
print("verdict:", rep.verdict.value)

# f(a)/C for n=3, k=1 increases past a = n + k
params = ProofGadgetParams(3, 1)
xs = np.linspace(4.1, 10, 6)
print([round(g_value(3, 1, float(x)), 4) for x in xs])
print("f monotonicity:", f_monotonicity_check(params).verdict.value)
