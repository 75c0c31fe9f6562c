"""
Step counts as a function of the radius
=======================================

Sweeping the radius shows k1 and k2 as staircases; the CSV can be plotted
with any external tool.
"""

import sys

from nsdisc import sweep_series
from nsdisc.approx import ApproximationMethod
from nsdisc.raster_io import export_csv

rows = sweep_series("inner", 1.0, 60.0, 0.5)
text = export_csv(rows)
if len(sys.argv) > 1:
    open(sys.argv[1], "w").write(text)
else:
    print(text[:400], "...")

# where the perimeter-based k2 jumps
m = ApproximationMethod.PERIMETER
prev = None
for row in rows:
    k1, k2 = row.counts[m]
    if prev is not None and k2 != prev:
        print(f"r={row.r:5.1f}: k2 {prev} -> {k2}")
    prev = k2
