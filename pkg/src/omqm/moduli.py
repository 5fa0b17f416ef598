"""Reduce closed planar paths to cell data: winding number and length scale.

Paths live in units of the minimal cell length, so the integer scale of a
loop is simply its rounded total length (clamped to at least one cell) and
the winding number counts signed turns around the cell center.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import TextIO

from .errors import DomainError, ParseError

__all__ = ["PlanarPath", "OMKnotData", "winding_number", "reduce_to_om_knot", "load_path"]

_CLOSE_EPS = 1e-9
_CENTER_EPS = 1e-12

Vec2 = tuple[float, float]


@dataclass(frozen=True)
class PlanarPath:
    """Ordered vertices (cell-length units) plus a closed flag."""

    vertices: tuple[Vec2, ...]
    closed: bool

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise DomainError("a path needs at least 2 vertices")
        if self.closed and len(self.vertices) < 3:
            raise DomainError("a closed path needs at least 3 vertices")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if a == b:
                raise DomainError(f"consecutive duplicate vertex {a}")


@dataclass(frozen=True)
class OMKnotData:
    """Integer cell scale (>= 1) and signed winding number."""

    scale: int
    winding: int


def _cycle_winding(vertices: tuple[Vec2, ...], center: Vec2) -> int:
    cx, cy = center
    total = 0.0
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i][0] - cx, vertices[i][1] - cy
        bx, by = vertices[(i + 1) % n][0] - cx, vertices[(i + 1) % n][1] - cy
        if math.hypot(ax, ay) < _CENTER_EPS:
            raise DomainError(f"vertex {i} coincides with the center (degenerate)")
        total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    return round(total / (2.0 * math.pi))


def winding_number(path: PlanarPath, center: Vec2) -> int:
    """Signed number of turns of a closed path about `center`.

    Total swept angle divided by 2*pi, exact for polygonal paths.
    """
    if not path.closed:
        raise DomainError("winding number requires a closed path")
    return _cycle_winding(path.vertices, center)


def reduce_to_om_knot(path: PlanarPath, center: Vec2, cell_radius: float = 1.0) -> OMKnotData:
    """Collapse a loop to its cell data: scale from length, winding from turns.

    Open paths are closed by endpoint identification first.  The scale is
    the rounded total polyline length (vertices already in cell units),
    clamped to 1: a loop shorter than one cell still occupies one cell.
    """
    if cell_radius <= 0.0:
        raise DomainError(f"cell_radius must be positive, got {cell_radius}")
    verts = path.vertices
    length = 0.0
    n = len(verts)
    for i in range(n if n >= 3 else n - 1):
        a, b = verts[i], verts[(i + 1) % n]
        length += math.hypot(b[0] - a[0], b[1] - a[1])
    scale = max(1, round(length))
    return OMKnotData(scale, _cycle_winding(verts, center))


def load_path(source: str | os.PathLike | TextIO) -> PlanarPath:
    """Parse a path file: one "x y" pair per line, '#' comments.

    The closed flag is inferred when the first and last vertices coincide
    within 1e-9 (the duplicate endpoint is dropped).
    """
    if hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    verts: list[Vec2] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'x y', got {text!r}")
        try:
            verts.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: not numeric: {text!r}") from None
    if len(verts) < 2:
        raise ParseError("path file needs at least 2 vertices")
    closed = math.hypot(verts[0][0] - verts[-1][0], verts[0][1] - verts[-1][1]) <= _CLOSE_EPS
    if closed:
        verts = verts[:-1]
    return PlanarPath(tuple(verts), closed)
