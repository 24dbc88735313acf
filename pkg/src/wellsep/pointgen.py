"""Deterministic point-set generators for the CLI and verification sweeps."""

from __future__ import annotations

import math
import random

from .errors import GridOverflow
from .geometry import Point2, PointSet, Rect

DEFAULT_BOUNDS = Rect(0.0, 10.0, 0.0, 10.0)

DISTRIBUTIONS = ("uniform", "grid", "clusters")

# Redraw budget per point before giving up on degenerate bounds.
_MAX_ATTEMPTS_PER_POINT = 1000


def generate(dist: str, n: int, seed: int = 0, bounds: Rect = DEFAULT_BOUNDS) -> PointSet:
    """n distinct points, reproducible for a fixed (dist, n, seed, bounds)."""
    if n < 1:
        raise ValueError(f"need at least one point, got n={n}")
    if dist == "uniform":
        return _uniform(n, seed, bounds)
    if dist == "grid":
        return _grid(n, bounds)
    if dist == "clusters":
        return _clusters(n, seed, bounds)
    raise ValueError(f"unknown distribution {dist!r}, expected one of {', '.join(DISTRIBUTIONS)}")


def _draw_distinct(n: int, draw) -> PointSet:
    seen: set[tuple[float, float]] = set()
    pts: list[Point2] = []
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > n * _MAX_ATTEMPTS_PER_POINT:
            raise ValueError("bounds too degenerate to hold n distinct points")
        x, y = draw()
        if (x, y) not in seen:
            seen.add((x, y))
            pts.append(Point2(x, y))
    return PointSet(pts)


def _uniform(n: int, seed: int, b: Rect) -> PointSet:
    rng = random.Random(seed)
    return _draw_distinct(n, lambda: (rng.uniform(b.xmin, b.xmax), rng.uniform(b.ymin, b.ymax)))


def _grid(n: int, b: Rect) -> PointSet:
    cols = math.isqrt(n - 1) + 1 if n > 1 else 1
    rows = -(-n // cols)
    if (cols > 1 and b.width <= 0) or (rows > 1 and b.height <= 0):
        raise GridOverflow(f"bounds cannot hold a distinct {cols}x{rows} grid")
    dx = b.width / (cols - 1) if cols > 1 else 0.0
    dy = b.height / (rows - 1) if rows > 1 else 0.0
    pts: list[Point2] = []
    for r in range(rows):
        for c in range(cols):
            if len(pts) == n:
                break
            pts.append(Point2(b.xmin + c * dx, b.ymin + r * dy))
    try:
        return PointSet(pts)
    except ValueError as exc:
        raise GridOverflow(str(exc)) from exc


def _clusters(n: int, seed: int, b: Rect) -> PointSet:
    rng = random.Random(seed)
    k = max(2, min(8, round(math.sqrt(n) / 1.5)))
    margin_x = 0.1 * b.width
    margin_y = 0.1 * b.height
    centers = [
        (
            rng.uniform(b.xmin + margin_x, b.xmax - margin_x),
            rng.uniform(b.ymin + margin_y, b.ymax - margin_y),
        )
        for _ in range(k)
    ]
    sigma = min(b.width, b.height) / 8.0

    def draw() -> tuple[float, float]:
        while True:
            cx, cy = centers[rng.randrange(k)]
            x = rng.gauss(cx, sigma)
            y = rng.gauss(cy, sigma)
            if b.xmin <= x <= b.xmax and b.ymin <= y <= b.ymax:
                return (x, y)

    if sigma <= 0:
        raise ValueError("bounds too degenerate for clustered points")
    return _draw_distinct(n, draw)
