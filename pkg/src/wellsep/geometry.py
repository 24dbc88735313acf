"""Planar primitives: points, axis-aligned rectangles, enclosing balls.

Everything here is immutable and purely functional; all other modules build
on these types and the distance measures below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptyPointSet


@dataclass(frozen=True)
class Point2:
    """A point in the plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


class PointSet:
    """Ordered, duplicate-free point collection; a point's index is its identity.

    Index stability matters: every structure downstream (tree leaves, graph
    vertices, result pairs) refers to points by their position here.
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point2]):
        pts = tuple(points)
        seen: set[tuple[float, float]] = set()
        for p in pts:
            key = (p.x, p.y)
            if key in seen:
                raise ValueError(f"duplicate point ({p.x}, {p.y})")
            seen.add(key)
        self.points = pts

    @classmethod
    def from_xy(cls, coords: Iterable[Sequence[float]]) -> "PointSet":
        return cls(Point2(float(x), float(y)) for x, y in coords)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point2:
        return self.points[i]

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.points)

    def __repr__(self) -> str:
        return f"PointSet({len(self.points)} points)"


@dataclass(frozen=True)
class Rect:
    """Closed axis-aligned rectangle; degenerate (zero-extent) sides allowed."""

    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self) -> None:
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise ValueError(f"invalid rect extents {self!r}")

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    def center(self) -> tuple[float, float]:
        return ((self.xmin + self.xmax) / 2.0, (self.ymin + self.ymax) / 2.0)

    def contains(self, p: Point2, slack: float = 0.0) -> bool:
        return (
            self.xmin - slack <= p.x <= self.xmax + slack
            and self.ymin - slack <= p.y <= self.ymax + slack
        )


@dataclass(frozen=True)
class Ball:
    """Closed disk given by center and nonnegative radius."""

    cx: float
    cy: float
    radius: float

    def __post_init__(self) -> None:
        if not self.radius >= 0.0:
            raise ValueError(f"ball radius must be nonnegative, got {self.radius}")


def dist(p: Point2, q: Point2) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p.x - q.x, p.y - q.y)


def bounding_box(points: Sequence[Point2]) -> Rect:
    """Smallest axis-aligned rectangle containing every given point."""
    if not points:
        raise EmptyPointSet("bounding_box needs at least one point")
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return Rect(min(xs), max(xs), min(ys), max(ys))


def lmax(r: Rect) -> float:
    """Length of the longer side of a rectangle."""
    return max(r.xmax - r.xmin, r.ymax - r.ymin)


def rect_min_distance(a: Rect, b: Rect) -> float:
    """Distance between the closest points of two closed rectangles (0 if they meet)."""
    gap_x = max(0.0, a.xmin - b.xmax, b.xmin - a.xmax)
    gap_y = max(0.0, a.ymin - b.ymax, b.ymin - a.ymax)
    return math.hypot(gap_x, gap_y)


def enclosing_ball(r: Rect) -> Ball:
    """Smallest ball containing the rectangle: centered, radius half the diagonal."""
    cx, cy = r.center()
    return Ball(cx, cy, math.hypot(r.width, r.height) / 2.0)
