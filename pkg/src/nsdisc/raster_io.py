"""Text and image renderings of digital discs, plus CSV export of sweeps."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .approx import METHODS
from .ns_core import DigitalDisc, Point

DISC_LEVEL = 0
BACKGROUND_LEVEL = 255
CIRCLE_LEVEL = 128
MAX_ASCII_STEPS = 35


@dataclass(frozen=True)
class RasterImage:
    """Gray-level image; ``pixels[row, col]`` with row 0 at the top."""

    pixels: np.ndarray

    def __post_init__(self):
        if self.pixels.ndim != 2 or self.pixels.size == 0:
            raise ValueError("an image needs a nonempty 2-D pixel grid")

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    def to_pgm(self) -> bytes:
        """Plain (P2) PGM encoding."""
        out = io.StringIO()
        out.write(f"P2\n{self.width} {self.height}\n255\n")
        for row in self.pixels:
            out.write(" ".join(str(int(v)) for v in row))
            out.write("\n")
        return out.getvalue().encode("ascii")


def read_pgm(data: bytes) -> RasterImage:
    """Parse a plain PGM produced by :meth:`RasterImage.to_pgm`."""
    tokens = data.decode("ascii").split()
    if not tokens or tokens[0] != "P2":
        raise ValueError("not a plain PGM (P2) stream")
    w, h, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    values = np.array([int(t) for t in tokens[4:]], dtype=np.uint8)
    if values.size != w * h or maxval != 255:
        raise ValueError("PGM sample count or maxval mismatch")
    return RasterImage(values.reshape(h, w))


def render_ascii(disc: DigitalDisc) -> str:
    """Distance labels on a square grid centered on the disc center,
    north at the top; cells outside the disc are blank."""
    if disc.radius_steps > MAX_ASCII_STEPS:
        raise ValueError(
            f"ascii maps support at most {MAX_ASCII_STEPS} steps, "
            f"got {disc.radius_steps}; render as PGM instead"
        )
    n = disc.extent()
    width = max(len(str(v)) for v in disc.labels.values())
    c = disc.center
    lines = []
    for y in range(c.y + n, c.y - n - 1, -1):
        cells = []
        for x in range(c.x - n, c.x + n + 1):
            v = disc.labels.get((x, y))
            cells.append(" " * width if v is None else str(v).rjust(width))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def parse_ascii(text: str, center=(0, 0)) -> DigitalDisc:
    """Inverse of :func:`render_ascii` with the map's middle cell at ``center``."""
    rows = text.rstrip("\n").split("\n")
    size = len(rows)
    n = size // 2
    numbers = [int(t) for t in text.split()]
    width = max(len(str(v)) for v in numbers)
    cell = width + 1
    c = Point(*center)
    labels = {}
    for i, line in enumerate(rows):
        line = line.ljust(size * cell)
        y = c.y + n - i
        for j in range(size):
            token = line[j * cell:j * cell + width].strip()
            if token:
                labels[Point(c.x - n + j, y)] = int(token)
    return DigitalDisc(c, max(labels.values()), labels)


def midpoint_circle(radius: float) -> set:
    """Outline offsets of a circle, by the midpoint rule applied to a real
    radius: step x outward, and step y inward whenever the midpoint
    ``(x, y - 1/2)`` falls outside the circle."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    r2 = radius * radius
    x, y = 0, int(math.floor(radius + 0.5))
    pts = set()
    while x <= y:
        for px, py in ((x, y), (y, x)):
            pts.update({(px, py), (-px, py), (px, -py), (-px, -py)})
        x += 1
        if x * x + (y - 0.5) ** 2 > r2:
            y -= 1
    return pts


def render_pgm(disc: DigitalDisc, circle_radius: float | None = None) -> RasterImage:
    """Disc pixels dark on a light background, optionally with a circle
    outline in mid gray. The canvas grows to fit the circle."""
    n = disc.extent()
    outline = None
    if circle_radius is not None:
        outline = midpoint_circle(circle_radius)
        n = max(n, max(max(abs(x), abs(y)) for x, y in outline))
    size = 2 * n + 1
    pixels = np.full((size, size), BACKGROUND_LEVEL, dtype=np.uint8)
    c = disc.center
    for (x, y) in disc.labels:
        pixels[n - (y - c.y), (x - c.x) + n] = DISC_LEVEL
    if outline is not None:
        for x, y in outline:
            pixels[n - y, x + n] = CIRCLE_LEVEL
    return RasterImage(pixels)


CSV_HEADER = "r,method,descriptor,k1,k2,k"


def export_csv(series) -> str:
    """One line per (radius, method), ordered by radius then method."""
    lines = [CSV_HEADER]
    for row in sorted(series, key=lambda row: row.r):
        for method, (k1, k2) in sorted(row.counts.items(), key=lambda kv: METHODS.index(kv[0])):
            lines.append(f"{row.r:.6f},{method.value},{row.kind.value},{k1},{k2},{k1 + k2}")
    return "\n".join(lines) + "\n"
