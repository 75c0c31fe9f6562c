"""
Approximating a circle of radius 50.7
=====================================

Each method picks an ideal side length; rounding converts it into counts of
1-steps and 2-steps. The resulting disc is written as a PGM with the circle
drawn over it.
"""

import sys
from pathlib import Path

from nsdisc import best_sequence, generate_disc
from nsdisc.approx import METHODS
from nsdisc.raster_io import render_pgm

r = 50.7
out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else None

print(f"{'method':<18}{'a_ideal':>9}{'a':>5}{'k1':>5}{'k2':>5}{'b':>10}")
for m in METHODS:
    res = best_sequence(m, "inner", r)
    print(f"{m.label:<18}{res.a_ideal:>9.4f}{res.realized.a:>5}{res.k1:>5}{res.k2:>5}{res.realized.b:>10.4f}")
    if out_dir is not None:
        disc = generate_disc((0, 0), res.k, res.sequence())
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / f"{m.value}.pgm").write_bytes(render_pgm(disc, circle_radius=r).to_pgm())

# The same counts through the linear formulas of the coefficient table.
from nsdisc import coefficient_table
from nsdisc.octagon import DescriptorKind

for m in METHODS:
    print(m.value, coefficient_table()[m, DescriptorKind.INNER_HULL].counts(r))
