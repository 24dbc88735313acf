import pytest

from wellsep.geometry import PointSet, Rect
from wellsep.pointgen import generate

BOUNDS = Rect(0.0, 100.0, 0.0, 100.0)


def points(*coords) -> PointSet:
    return PointSet.from_xy(coords)


def random_board(n: int, seed: int, dist: str = "uniform") -> PointSet:
    return generate(dist, n, seed=seed, bounds=BOUNDS)


@pytest.fixture
def trace_board() -> PointSet:
    """Three points whose split tree is known by hand."""
    return points((0, 0), (4, 0), (0, 3))
