"""
Curve-fitting approximations checked numerically
================================================

The least-squares and least-distance side lengths come from integrals over
one sixteenth of the circle. Here the integrals are evaluated by Simpson's
rule and minimized by golden-section search, then compared with the closed
forms.
"""

import numpy as np

from nsdisc.approx import COEFFICIENTS, ApproximationMethod
from nsdisc.variational import minimize_objective, objective, optimal_radius

closed = {
    "least_squares": COEFFICIENTS[ApproximationMethod.LEAST_SQUARES],
    "least_distance": COEFFICIENTS[ApproximationMethod.LEAST_DISTANCE],
}

for kind, c in closed.items():
    for r in (1.0, 50.7):
        a = minimize_objective(kind, r)
        print(f"{kind:<15} r={r:<5} a*/r = {a / r:.7f}  closed form {c:.7f}")

# The objective as a function of the circle radius for a unit-side octagon.
for kind in closed:
    radii = np.linspace(1.20, 1.28, 9)
    vals = [objective(kind, 1.0, r) for r in radii]
    print(f"\n{kind}: best circle radius {optimal_radius(kind, 1.0):.6f}")
    for r, v in zip(radii, vals):
        print(f"  r={r:.3f}  F={v:.3e}")
