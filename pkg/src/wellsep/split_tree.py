"""Split tree: recursive midpoint subdivision along the longer bounding-box side.

Each node covers a subset of the input points and stores the exact bounding
box of that subset (boxes are re-shrunk after every cut, they are not the raw
half-rectangles). Leaves hold single points, so a tree over n points has n
leaves and n - 1 internal nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyPointSet, InvalidNode
from .geometry import Ball, PointSet, Rect, enclosing_ball, lmax


@dataclass
class SplitTreeNode:
    id: int
    rect: Rect
    point_indices: tuple[int, ...]  # ascending indices into the source PointSet
    left: Optional[int] = None
    right: Optional[int] = None
    leaf_point: Optional[int] = None

    @property
    def is_leaf(self) -> bool:
        return self.leaf_point is not None

    @property
    def size(self) -> int:
        return len(self.point_indices)


class SplitTree:
    """Immutable arena of nodes; handles are indices into ``nodes``.

    ``lmaxes`` and ``balls`` cache each node's longer-side length and smallest
    enclosing ball of its box; the pair-finding recursion reads them heavily.
    """

    __slots__ = ("nodes", "root", "source", "lmaxes", "balls")

    def __init__(self, nodes: list[SplitTreeNode], root: int, source: PointSet):
        self.nodes = nodes
        self.root = root
        self.source = source
        self.lmaxes = [lmax(nd.rect) for nd in nodes]
        self.balls = [enclosing_ball(nd.rect) for nd in nodes]

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, v: int) -> SplitTreeNode:
        if not isinstance(v, int) or v < 0 or v >= len(self.nodes):
            raise InvalidNode(f"no node with handle {v!r}")
        return self.nodes[v]

    def node_lmax(self, v: int) -> float:
        """Longer-side length of the node's bounding box."""
        self.node(v)
        return self.lmaxes[v]

    def node_ball(self, v: int) -> Ball:
        """Smallest enclosing ball of the node's bounding box."""
        self.node(v)
        return self.balls[v]

    def leaves(self) -> list[SplitTreeNode]:
        return [nd for nd in self.nodes if nd.is_leaf]

    def depths(self) -> list[int]:
        """Depth of every node (root = 0), indexed by handle."""
        out = [0] * len(self.nodes)
        stack = [self.root]
        while stack:
            v = stack.pop()
            nd = self.nodes[v]
            if not nd.is_leaf:
                out[nd.left] = out[v] + 1
                out[nd.right] = out[v] + 1
                stack.append(nd.left)
                stack.append(nd.right)
        return out


def node_lmax(tree: SplitTree, v: int) -> float:
    return tree.node_lmax(v)


def build_split_tree(ps: PointSet) -> SplitTree:
    """Build the split tree of a nonempty point set.

    At every node with more than one point the bounding box is cut at the
    midpoint of its longer side (ties go to the x-axis); points whose
    splitting coordinate is <= the midpoint form the left child. Construction
    uses an explicit stack, so degenerate chains cannot hit the recursion
    limit, and node ids follow preorder (left subtree before right).
    """
    n = len(ps)
    if n == 0:
        raise EmptyPointSet("cannot build a split tree from zero points")
    xs = [p.x for p in ps]
    ys = [p.y for p in ps]

    nodes: list[SplitTreeNode] = []
    pending: list[tuple[tuple[int, ...], int, bool]] = [(tuple(range(n)), -1, False)]
    while pending:
        idx, parent, is_right = pending.pop()
        sub_x = [xs[i] for i in idx]
        sub_y = [ys[i] for i in idx]
        rect = Rect(min(sub_x), max(sub_x), min(sub_y), max(sub_y))
        nid = len(nodes)
        node = SplitTreeNode(
            id=nid,
            rect=rect,
            point_indices=idx,
            leaf_point=idx[0] if len(idx) == 1 else None,
        )
        nodes.append(node)
        if parent >= 0:
            if is_right:
                nodes[parent].right = nid
            else:
                nodes[parent].left = nid
        if len(idx) == 1:
            continue

        if rect.width >= rect.height:
            mid = (rect.xmin + rect.xmax) / 2.0
            left_idx = tuple(i for i in idx if xs[i] <= mid)
            right_idx = tuple(i for i in idx if xs[i] > mid)
            lo, coords = rect.xmin, xs
        else:
            mid = (rect.ymin + rect.ymax) / 2.0
            left_idx = tuple(i for i in idx if ys[i] <= mid)
            right_idx = tuple(i for i in idx if ys[i] > mid)
            lo, coords = rect.ymin, ys
        if not right_idx:
            # Adjacent floats can round the midpoint up onto the max
            # coordinate; cut just above the min instead so both halves
            # stay nonempty.
            left_idx = tuple(i for i in idx if coords[i] <= lo)
            right_idx = tuple(i for i in idx if coords[i] > lo)
        pending.append((right_idx, nid, True))
        pending.append((left_idx, nid, False))

    return SplitTree(nodes, 0, ps)
