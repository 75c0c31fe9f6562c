"""Best sequence-generated octagon for a circle of given radius.

Each method fixes the side length of an ideal regular octagon as a multiple
of the radius; the side is then converted to step counts for a descriptor.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, asdict
from decimal import ROUND_HALF_UP, Decimal

from ._numeric import round_half_away
from .ns_core import NeighbourhoodSequence
from .octagon import (
    SQRT2,
    DescriptorKind,
    OctagonDescriptor,
    describe,
    invert_sidelength,
)


class ApproximationMethod(enum.Enum):
    PERIMETER = "perimeter"
    AREA = "area"
    INSCRIBED_CIRCLE = "inscribed"
    COVERING_CIRCLE = "covering"
    LEAST_SQUARES = "least_squares"
    LEAST_DISTANCE = "least_distance"

    @classmethod
    def parse(cls, name) -> "ApproximationMethod":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        key = {"inscribed_circle": "inscribed", "covering_circle": "covering"}.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown approximation method {name!r}") from None

    @property
    def label(self) -> str:
        return _LABELS[self]


METHODS = tuple(ApproximationMethod)
KINDS = tuple(DescriptorKind)

_LABELS = {
    ApproximationMethod.PERIMETER: "Perimeter based",
    ApproximationMethod.AREA: "Area based",
    ApproximationMethod.INSCRIBED_CIRCLE: "Inscribed circle",
    ApproximationMethod.COVERING_CIRCLE: "Covering circle",
    ApproximationMethod.LEAST_SQUARES: "Least squares",
    ApproximationMethod.LEAST_DISTANCE: "Least distance",
}

# side length of the ideal regular octagon per unit radius
COEFFICIENTS = {
    ApproximationMethod.PERIMETER: math.pi / 4,
    ApproximationMethod.AREA: math.sqrt(math.pi / (2 * (1 + SQRT2))),
    ApproximationMethod.INSCRIBED_CIRCLE: 2 * (SQRT2 - 1),
    ApproximationMethod.COVERING_CIRCLE: math.sqrt(2 - SQRT2),
    ApproximationMethod.LEAST_SQUARES: math.pi
    / (4 * (SQRT2 + 1) * math.log(math.tan(5 * math.pi / 16))),
    ApproximationMethod.LEAST_DISTANCE: 2 / (SQRT2 + 1) * math.cos(math.pi / 16),
}

EXACT_FORMULAS = {
    ApproximationMethod.PERIMETER: "pi/4 r",
    ApproximationMethod.AREA: "sqrt(pi/(2(1+sqrt2))) r",
    ApproximationMethod.INSCRIBED_CIRCLE: "2(sqrt2-1) r",
    ApproximationMethod.COVERING_CIRCLE: "sqrt(2-sqrt2) r",
    ApproximationMethod.LEAST_SQUARES: "pi/(4(sqrt2+1) ln tan(5pi/16)) r",
    ApproximationMethod.LEAST_DISTANCE: "2/(sqrt2+1) cos(pi/16) r",
}


def ideal_sidelength(method, r: float) -> float:
    method = ApproximationMethod.parse(method)
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    return COEFFICIENTS[method] * r


@dataclass(frozen=True)
class ApproximationResult:
    method: ApproximationMethod
    kind: DescriptorKind
    r: float
    a_ideal: float
    k1: int
    k2: int
    realized: OctagonDescriptor
    clamped: bool = False

    @property
    def k(self) -> int:
        return self.k1 + self.k2

    @property
    def degenerate(self) -> bool:
        """True when only one kind of step is used (square or single point)."""
        return self.clamped or self.k1 == 0 or self.k2 == 0

    def sequence(self) -> NeighbourhoodSequence:
        return canonical_sequence(self.k1, self.k2)

    def to_dict(self) -> dict:
        d = asdict(self.realized)
        return {
            "method": self.method.value,
            "descriptor": self.kind.value,
            "r": self.r,
            "a_ideal": self.a_ideal,
            "k1": self.k1,
            "k2": self.k2,
            "k": self.k,
            "a": d["a"],
            "b": d["b"],
            "P": d["P"],
            "A": d["A"],
            "clamped": self.clamped,
            "degenerate": self.degenerate,
        }


def best_sequence(method, kind, r: float) -> ApproximationResult:
    method = ApproximationMethod.parse(method)
    kind = DescriptorKind.parse(kind)
    a = ideal_sidelength(method, r)
    k1, k2, clamped = invert_sidelength(a, kind)
    return ApproximationResult(method, kind, r, a, k1, k2, describe(k1, k2, kind), clamped)


def canonical_sequence(k1: int, k2: int) -> NeighbourhoodSequence:
    """Sequence whose first ``k1 + k2`` elements hold ``k2`` twos spread as
    evenly as possible, followed by ones.

    Position ``i`` holds a 2 exactly when ``floor(i*k2/k)`` increases there,
    so every initial segment is itself close to the target 2-frequency.
    """
    if k1 < 0 or k2 < 0:
        raise ValueError("step counts must be nonnegative")
    k = k1 + k2
    prefix = tuple(
        2 if (i * k2) // k > ((i - 1) * k2) // k else 1 for i in range(1, k + 1)
    )
    return NeighbourhoodSequence.constant(1, prefix)


@dataclass(frozen=True)
class CoefficientEntry:
    """``k1 = [k1_coeff * r + k1_offset]``, ``k2 = [k2_coeff * r + k2_offset]``."""

    k1_coeff: float
    k1_offset: float
    k2_coeff: float
    k2_offset: float

    def counts(self, r: float) -> tuple[int, int]:
        return (
            round_half_away(self.k1_coeff * r + self.k1_offset),
            round_half_away(self.k2_coeff * r + self.k2_offset),
        )


def _tabulated(x) -> Decimal:
    return Decimal(x).quantize(Decimal("0.000001"), rounding=ROUND_HALF_UP)


def tabulated_sidelength(method) -> Decimal:
    """Side-length coefficient rounded to 6 decimal places."""
    return _tabulated(COEFFICIENTS[ApproximationMethod.parse(method)])


def tabulated_entry(method, kind) -> tuple:
    """6-decimal ``(k1 coeff, k1 offset, k2 coeff, k2 offset)`` derived from
    the already rounded side-length coefficient, the way a printed table is
    built from another printed table. This differs from rounding the
    exact coefficient in one place: covering circle, k2 = 0.382684 rather
    than 0.382683."""
    method = ApproximationMethod.parse(method)
    kind = DescriptorKind.parse(kind)
    a = tabulated_sidelength(method)
    entry = coefficient_table()[method, kind]
    if kind is DescriptorKind.PIXEL:
        k1 = a
    else:
        k1 = _tabulated(float(a) / SQRT2)
    k2 = _tabulated(a / 2)
    return k1, entry.k1_offset, k2, entry.k2_offset


def coefficient_table() -> dict:
    """All (method, kind) pairs mapped to their linear step-count formula."""
    table = {}
    for method in METHODS:
        c = COEFFICIENTS[method]
        table[method, DescriptorKind.PIXEL] = CoefficientEntry(c, 1.0, c / 2, -0.5)
        table[method, DescriptorKind.INNER_HULL] = CoefficientEntry(c / SQRT2, 0.0, c / 2, 0.0)
        table[method, DescriptorKind.OUTER_HULL] = CoefficientEntry(c / SQRT2, 0.0, c / 2, -0.5)
    return table


@dataclass(frozen=True)
class SweepRow:
    r: float
    kind: DescriptorKind
    counts: dict  # ApproximationMethod -> (k1, k2)


def radius_grid(r_min: float, r_max: float, step: float) -> list:
    if not (0 < r_min <= r_max) or not step > 0:
        raise ValueError(
            f"need 0 < r_min <= r_max and step > 0, got {r_min}, {r_max}, {step}"
        )
    n = int(math.floor((r_max - r_min) / step + 1e-9))
    # rounding keeps grid points like 50.7 exact in decimal
    return [round(r_min + i * step, 12) for i in range(n + 1)]


def sweep_series(kind, r_min: float, r_max: float, step: float, methods=METHODS) -> list:
    kind = DescriptorKind.parse(kind)
    methods = [ApproximationMethod.parse(m) for m in methods]
    rows = []
    for r in radius_grid(r_min, r_max, step):
        counts = {}
        for m in methods:
            res = best_sequence(m, kind, r)
            counts[m] = (res.k1, res.k2)
        rows.append(SweepRow(r, kind, counts))
    return rows
