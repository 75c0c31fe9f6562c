"""Neighbourhood sequences on the square grid.

Points are integer pairs. A neighbourhood sequence ``B = (b_1, b_2, ...)``
decides, step by step, whether a path may move to a 4-neighbour (``b_i = 1``)
or to an 8-neighbour (``b_i = 2``). Everything here uses exact integer
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

PERIODIC = "periodic"
CONSTANT = "constant"


class Point(NamedTuple):
    x: int
    y: int

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)


def _as_point(p) -> Point:
    x, y = p
    if int(x) != x or int(y) != y:
        raise ValueError(f"lattice points need integer coordinates, got {p!r}")
    return Point(int(x), int(y))


@dataclass(frozen=True)
class NeighbourhoodSequence:
    """Infinite {1,2}-sequence stored as a finite prefix plus a tail rule.

    With ``tail="periodic"`` the prefix repeats forever; with
    ``tail="constant"`` every element after the prefix equals ``tail_value``.
    """

    prefix: tuple[int, ...]
    tail: str = PERIODIC
    tail_value: int = 1

    def __post_init__(self):
        prefix = tuple(int(v) for v in self.prefix)
        object.__setattr__(self, "prefix", prefix)
        if any(v not in (1, 2) for v in prefix):
            raise ValueError(f"sequence elements must be 1 or 2, got {prefix}")
        if self.tail == PERIODIC:
            if not prefix:
                raise ValueError("a periodic sequence needs a nonempty prefix")
        elif self.tail == CONSTANT:
            if self.tail_value not in (1, 2):
                raise ValueError(f"tail value must be 1 or 2, got {self.tail_value}")
        else:
            raise ValueError(f"unknown tail rule {self.tail!r}")

    @classmethod
    def periodic(cls, *values: int) -> "NeighbourhoodSequence":
        return cls(tuple(values), PERIODIC)

    @classmethod
    def constant(cls, value: int, prefix: Sequence[int] = ()) -> "NeighbourhoodSequence":
        return cls(tuple(prefix), CONSTANT, value)

    def __getitem__(self, i: int) -> int:
        return sequence_element(self, i)

    def first(self, k: int) -> tuple[int, ...]:
        """The elements ``b_1 .. b_k``."""
        return tuple(sequence_element(self, i) for i in range(1, k + 1))

    def __str__(self):
        body = ",".join(map(str, self.prefix))
        if self.tail == PERIODIC:
            return f"({body})*"
        return f"({body}{',' if body else ''}{self.tail_value}...)"


def sequence_element(B: NeighbourhoodSequence, i: int) -> int:
    """Return ``b_i`` (1-based)."""
    if i < 1:
        raise IndexError(f"sequence positions start at 1, got {i}")
    n = len(B.prefix)
    if i <= n:
        return B.prefix[i - 1]
    if B.tail == PERIODIC:
        return B.prefix[(i - 1) % n]
    return B.tail_value


def is_j_neighbour(p, q, j: int) -> bool:
    """True iff p and q differ by at most 1 per coordinate and by at most
    ``j`` in total. A point is a j-neighbour of itself."""
    if j not in (1, 2):
        raise ValueError(f"j must be 1 or 2, got {j}")
    p, q = _as_point(p), _as_point(q)
    dx, dy = abs(p.x - q.x), abs(p.y - q.y)
    return max(dx, dy) <= 1 and dx + dy <= j


def is_valid_path(points: Sequence, B: NeighbourhoodSequence) -> bool:
    if not points:
        raise ValueError("a path has at least one point")
    pts = [_as_point(p) for p in points]
    return all(
        is_j_neighbour(pts[i - 1], pts[i], sequence_element(B, i))
        for i in range(1, len(pts))
    )


def _dilate(mask: np.ndarray, j: int) -> np.ndarray:
    """One step of the j-neighbourhood applied to a boolean grid."""
    out = mask.copy()
    out[1:, :] |= mask[:-1, :]
    out[:-1, :] |= mask[1:, :]
    out[:, 1:] |= mask[:, :-1]
    out[:, :-1] |= mask[:, 1:]
    if j == 2:
        out[1:, 1:] |= mask[:-1, :-1]
        out[1:, :-1] |= mask[:-1, 1:]
        out[:-1, 1:] |= mask[1:, :-1]
        out[:-1, :-1] |= mask[1:, 1:]
    return out


def distance_map(B: NeighbourhoodSequence, n: int) -> np.ndarray:
    """Breadth-first distances from the origin to every point with
    ``|x|, |y| <= n``; entry ``[y + n, x + n]``.

    Every such point is within ``2n`` steps, and no path of that length
    leaves the ``2n`` box, so expanding on that box and cropping is exact.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    big = 2 * n
    size = 2 * big + 1
    labels = np.full((size, size), -1, dtype=np.int64)
    reached = np.zeros((size, size), dtype=bool)
    reached[big, big] = True
    labels[big, big] = 0
    inner = np.s_[big - n:big + n + 1, big - n:big + n + 1]
    step = 0
    while not reached[inner].all():
        step += 1
        grown = _dilate(reached, sequence_element(B, step))
        labels[grown & ~reached] = step
        reached = grown
    return labels[inner].copy()


def ns_distance_bfs(p, q, B: NeighbourhoodSequence) -> int:
    """Shortest-path length from p to q by wavefront expansion (reference oracle)."""
    d = _as_point(q) - _as_point(p)
    n = max(abs(d.x), abs(d.y))
    return int(distance_map(B, n)[d.y + n, d.x + n])


def ns_distance(p, q, B: NeighbourhoodSequence) -> int:
    """Closed-form distance: the larger of the chessboard distance and the
    first step count whose prefix sum of ``b_i`` covers ``|dx| + |dy|``."""
    d = _as_point(q) - _as_point(p)
    x, y = abs(d.x), abs(d.y)
    need = x + y
    m, total = 0, 0
    while total < need:
        m += 1
        total += sequence_element(B, m)
    return max(x, y, m)


@dataclass(frozen=True)
class DigitalDisc:
    """Lattice points within ``radius_steps`` steps of ``center``, labelled
    with their distance."""

    center: Point
    radius_steps: int
    labels: dict = field(compare=True)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, p):
        return tuple(p) in self.labels

    @property
    def points(self) -> frozenset:
        return frozenset(self.labels)

    def extent(self) -> int:
        """Largest coordinate offset of any disc point from the center."""
        c = self.center
        return max(max(abs(p[0] - c.x), abs(p[1] - c.y)) for p in self.labels)


def generate_disc(center, k: int, B: NeighbourhoodSequence) -> DigitalDisc:
    """Label every point at distance at most ``k`` from ``center``.

    No k-step path leaves the square ``|dx|, |dy| <= k``.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    c = _as_point(center)
    size = 2 * k + 1
    labels = np.full((size, size), -1, dtype=np.int64)
    reached = np.zeros((size, size), dtype=bool)
    reached[k, k] = True
    labels[k, k] = 0
    for step in range(1, k + 1):
        grown = _dilate(reached, sequence_element(B, step))
        labels[grown & ~reached] = step
        reached = grown
    ys, xs = np.nonzero(reached)
    out = {
        Point(c.x + int(x) - k, c.y + int(y) - k): int(labels[y, x])
        for y, x in zip(ys, xs)
    }
    return DigitalDisc(c, k, out)


def disc_point_set(k: int, values: Iterable[int]) -> frozenset:
    """Support of the k-step disc at the origin for the first ``k``
    sequence values given explicitly."""
    values = tuple(values)
    if len(values) < k:
        raise ValueError("need at least k sequence values")
    B = NeighbourhoodSequence.constant(1, values) if values else NeighbourhoodSequence.constant(1)
    return generate_disc((0, 0), k, B).points
