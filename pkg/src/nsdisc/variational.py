"""Numerical check of the curve-fitting approximations.

On one sixteenth of the plane (polar angle 0 to pi/8) the circle is
``z0(alpha) = r`` and a regular octagon with side ``a`` is
``z(alpha) = m / cos(alpha)`` with apothem ``m = (sqrt2 + 1) a / 2``.
The two objectives measure the gap between these curves by quadrature.

For a fixed octagon the objective is minimized over the circle radius; by
homogeneity this fixes the optimal ratio ``a / r``, which is then scaled to
the requested radius.
"""

import math

import numpy as np
from scipy.integrate import simpson

from ._numeric import golden_section

SQRT2 = math.sqrt(2.0)
SECTOR = math.pi / 8
PANELS = 2048

KINDS = ("least_squares", "least_distance")


def apothem(a):
    return (SQRT2 + 1) * a / 2


def octagon_polar(alpha, a):
    if np.any(np.asarray(alpha) < 0) or np.any(np.asarray(alpha) > SECTOR + 1e-15):
        raise ValueError("alpha must lie in [0, pi/8]")
    return apothem(a) / np.cos(alpha)


def threshold_angle(a, r):
    """Angle at which the octagon boundary crosses the circle."""
    ratio = apothem(a) / r
    if ratio > 1:
        raise ValueError(
            f"octagon with side {a} lies outside the circle of radius {r} on the sector"
        )
    return math.acos(ratio)


def _integrate(f, lo, hi, panels):
    if hi <= lo:
        return 0.0
    x = np.linspace(lo, hi, panels + 1)
    return float(simpson(f(x), x=x))


def objective(kind, a, r, panels=PANELS):
    """Gap between octagon and circle over the sector [0, pi/8]."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")
    if a <= 0 or r <= 0:
        raise ValueError("a and r must be positive")
    m = apothem(a)
    gap = lambda t: r - m / np.cos(t)
    if kind == "least_squares":
        return _integrate(lambda t: gap(t) ** 2, 0.0, SECTOR, panels)
    # clamp the crossing to the sector so the objective stays defined (and
    # equal to the integral of |gap|) when the curves do not cross inside it
    t = 0.0 if m >= r else min(math.acos(m / r), SECTOR)
    return _integrate(gap, 0.0, t, panels) - _integrate(gap, t, SECTOR, panels)


def optimal_radius(kind, a, tol=1e-10):
    """Circle radius closest to the octagon with side ``a``."""
    lo, hi = a / 1.2, a / 0.5
    rho = golden_section(lambda r: objective(kind, a, r), lo, hi, tol * a)
    if min(rho - lo, hi - rho) < 10 * tol * a:
        raise RuntimeError(f"minimum of {kind} objective not bracketed by [{lo}, {hi}]")
    return rho


def minimize_objective(kind, r):
    """Optimal octagon side for a circle of radius ``r``."""
    if r <= 0:
        raise ValueError("r must be positive")
    ref = 1.0
    return ref * r / optimal_radius(kind, ref)
