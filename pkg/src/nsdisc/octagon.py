"""Octagons generated by neighbourhood sequences.

A disc grown with ``k1`` steps of value 1 and ``k2`` steps of value 2 is an
octagon with axis-parallel sides ``a`` and diagonal sides ``b``. How those
lengths are measured depends on the descriptor convention: counting pixels,
taking the convex hull of pixel centres (inner hull), or the convex hull of
the pixels as unit squares (outer hull).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from ._numeric import golden_section, round_half_away

SQRT2 = math.sqrt(2.0)
REGULAR_OCTAGON_KAPPA = 32 * (SQRT2 - 1)


class DescriptorKind(enum.Enum):
    PIXEL = "pixel"
    INNER_HULL = "inner"
    OUTER_HULL = "outer"

    @classmethod
    def parse(cls, name) -> "DescriptorKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        aliases = {
            "pixel": cls.PIXEL,
            "inner": cls.INNER_HULL,
            "inner_hull": cls.INNER_HULL,
            "inner_octagon": cls.INNER_HULL,
            "outer": cls.OUTER_HULL,
            "outer_hull": cls.OUTER_HULL,
            "outer_octagon": cls.OUTER_HULL,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown descriptor kind {name!r}") from None


@dataclass(frozen=True)
class OctagonDescriptor:
    kind: DescriptorKind
    k1: int
    k2: int
    a: float
    b: float
    P: float
    A: float

    @property
    def k(self) -> int:
        return self.k1 + self.k2


def describe(k1: int, k2: int, kind) -> OctagonDescriptor:
    """Side lengths, perimeter and area of the octagon grown from ``k1`` ones
    and ``k2`` twos."""
    kind = DescriptorKind.parse(kind)
    if k1 < 0 or k2 < 0:
        raise ValueError(f"step counts must be nonnegative, got k1={k1}, k2={k2}")
    if kind is DescriptorKind.PIXEL:
        if k1 < 1:
            raise ValueError("the pixel descriptor needs k1 >= 1")
        a = 2 * k2 + 1
        b = k1 - 1
        area = (2 * k2 + 1) ** 2 + 2 * k1 * (4 * k2 + k1 + 1)
    else:
        a = 2 * k2 if kind is DescriptorKind.INNER_HULL else 2 * k2 + 1
        b = SQRT2 * k1
        area = hull_area(a, b)
    return OctagonDescriptor(kind, k1, k2, a, b, 4 * (a + b), area)


def hull_area(a: float, b: float) -> float:
    """Area of the 135-degree octagon with axis sides ``a`` and diagonal sides ``b``."""
    return a * a + 2 * SQRT2 * a * b + b * b


class Inversion(NamedTuple):
    k1: int
    k2: int
    clamped: bool


def invert_sidelength(a: float, kind) -> Inversion:
    """Step counts whose regular octagon has side length closest to ``a``.

    Counts below their minimum (``k1 >= 1`` for pixels, ``k2 >= 0``) are
    raised to it and reported through ``clamped``. With half-away rounding
    and ``a > 0`` the formulas already respect these minima, so the flag
    only guards the contract.
    """
    kind = DescriptorKind.parse(kind)
    if not a > 0:
        raise ValueError(f"side length must be positive, got {a}")
    if kind is DescriptorKind.PIXEL:
        k1 = round_half_away(a + 1)
        k2 = round_half_away((a - 1) / 2)
        k1_min = 1
    elif kind is DescriptorKind.INNER_HULL:
        k1 = round_half_away(a / SQRT2)
        k2 = round_half_away(a / 2)
        k1_min = 0
    else:
        k1 = round_half_away(a / SQRT2)
        k2 = round_half_away((a - 1) / 2)
        k1_min = 0
    clamped = k1 < k1_min or k2 < 0
    return Inversion(max(k1, k1_min), max(k2, 0), clamped)


def isoperimetric_ratio(P: float, A: float) -> float:
    if P <= 0 or A <= 0:
        raise ValueError(f"perimeter and area must be positive, got P={P}, A={A}")
    return P * P / A


def kappa_of_c(c: float) -> float:
    """Isoperimetric ratio of the hull octagon as a function of the share
    ``c = k2 / k`` of 2-steps."""
    if not 0 <= c <= 1:
        raise ValueError(f"c must lie in [0, 1], got {c}")
    return 16 * (1 - 2 * (2 - SQRT2) * c * (1 - c) / (c * (2 - c) + 1))


def optimal_c(tol: float = 1e-10) -> float:
    """Numerical minimizer of :func:`kappa_of_c` on [0, 1]."""
    return golden_section(kappa_of_c, 0.0, 1.0, tol)


def limit_frequency(kind) -> float:
    """Limiting share of 2-steps at which the octagon becomes regular."""
    kind = DescriptorKind.parse(kind)
    if kind is DescriptorKind.PIXEL:
        return 1 / 3
    return SQRT2 - 1
