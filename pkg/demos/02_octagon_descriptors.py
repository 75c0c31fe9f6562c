"""
Octagon descriptors and the isoperimetric ratio
===============================================

The octagon grown from k1 ones and k2 twos can be measured three ways. Its
isoperimetric ratio P^2/A depends on the share c of twos and is smallest when
the octagon is regular.
"""

import numpy as np

from nsdisc.octagon import (
    DescriptorKind,
    describe,
    isoperimetric_ratio,
    kappa_of_c,
    limit_frequency,
    optimal_c,
)

for kind in DescriptorKind:
    d = describe(29, 21, kind)
    print(f"{kind.value:>6}: a={d.a:.4f} b={d.b:.4f} P={d.P:.4f} A={d.A:.4f}")

c = np.linspace(0, 1, 11)
print("\n c     kappa(c)")
for ci in c:
    print(f"{ci:.1f}   {kappa_of_c(ci):.6f}")

c_star = optimal_c()
print(f"\nminimizer c* = {c_star:.9f}  (sqrt2-1 = {np.sqrt(2) - 1:.9f})")
print(f"kappa(c*)    = {kappa_of_c(c_star):.9f}")
print(f"regular octagon P^2/A = {isoperimetric_ratio(8, 2 * (1 + np.sqrt(2))):.9f}")

# A large inner-hull octagon with c near c* has nearly the same ratio.
k = 10_000
k2 = round(c_star * k)
d = describe(k - k2, k2, "inner")
print(f"k={k}: P^2/A = {isoperimetric_ratio(d.P, d.A):.9f}")

for kind in DescriptorKind:
    print(f"regular in the limit at 2-frequency p = {limit_frequency(kind):.6f} ({kind.value})")
