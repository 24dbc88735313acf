"""2-D proximity toolkit built on well-separated pair decompositions.

Split trees, WSPDs, t-spanners, closest pair, k-closest pairs, all nearest
neighbors, and approximate Euclidean minimum spanning trees, plus brute-force
oracles, a CLI, and a scene format for the browser visualizer.
"""

from .errors import (
    DisconnectedGraph,
    EmptyPointSet,
    GridOverflow,
    InvalidK,
    InvalidNode,
    InvalidStretchFactor,
    NeedTwoPoints,
    SeparationTooSmall,
    WellsepError,
)
from .geometry import (
    Ball,
    Point2,
    PointSet,
    Rect,
    bounding_box,
    dist,
    enclosing_ball,
    lmax,
    rect_min_distance,
)
from .pipeline import compute_scene
from .proximity import (
    IndexPair,
    NeighborMap,
    all_nearest_neighbors,
    closest_pair,
    k_closest_pairs,
)
from .scene import Scene
from .spanner import (
    Graph,
    Tree,
    approx_mst,
    build_t_spanner,
    dilation,
    prim_mst,
    separation_for_stretch,
)
from .split_tree import SplitTree, SplitTreeNode, build_split_tree, node_lmax
from .wspd import Wspd, WspdPair, compute_wspd, find_pairs, is_well_separated

__all__ = [
    "Ball",
    "DisconnectedGraph",
    "EmptyPointSet",
    "Graph",
    "GridOverflow",
    "IndexPair",
    "InvalidK",
    "InvalidNode",
    "InvalidStretchFactor",
    "NeedTwoPoints",
    "NeighborMap",
    "Point2",
    "PointSet",
    "Rect",
    "Scene",
    "SeparationTooSmall",
    "SplitTree",
    "SplitTreeNode",
    "Tree",
    "WellsepError",
    "Wspd",
    "WspdPair",
    "all_nearest_neighbors",
    "approx_mst",
    "bounding_box",
    "build_split_tree",
    "build_t_spanner",
    "closest_pair",
    "compute_scene",
    "compute_wspd",
    "dilation",
    "dist",
    "enclosing_ball",
    "find_pairs",
    "is_well_separated",
    "k_closest_pairs",
    "lmax",
    "node_lmax",
    "prim_mst",
    "rect_min_distance",
    "separation_for_stretch",
]
