"""Exception types shared across the toolkit."""


class WellsepError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyPointSet(WellsepError):
    """An operation that needs at least one point received none."""


class InvalidNode(WellsepError):
    """A split-tree node handle does not refer to a node of the tree."""


class InvalidStretchFactor(WellsepError):
    """Spanner stretch factor must satisfy t > 1."""


class DisconnectedGraph(WellsepError):
    """The graph is not connected, so the requested quantity is undefined."""


class NeedTwoPoints(WellsepError):
    """An operation over point pairs received fewer than two points."""


class InvalidK(WellsepError):
    """k is outside the valid range 1..C(n,2)."""


class SeparationTooSmall(WellsepError):
    """All-nearest-neighbors requires a separation ratio s > 2."""


class GridOverflow(WellsepError):
    """The requested grid cannot hold n distinct points inside the bounds."""
