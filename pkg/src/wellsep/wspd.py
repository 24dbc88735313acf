"""Well-separated pair decomposition over a split tree.

Two node sets are well separated with respect to s when the smallest
enclosing balls of their boxes, inflated to a common radius rho, are disjoint
and at least s * rho apart. A decomposition is a list of such node pairs that
separates every unordered pair of distinct input points exactly once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import Ball, PointSet, rect_min_distance
from .split_tree import SplitTree, build_split_tree


@dataclass(frozen=True)
class WspdPair:
    """One pair of the decomposition: two node handles plus the witness data.

    ``ball_a`` and ``ball_b`` are the enclosing balls inflated to the common
    radius used by the separation test; ``gap`` is the minimum distance
    between the two node boxes (cached for the k-closest-pairs search).
    """

    a: int
    b: int
    ball_a: Ball
    ball_b: Ball
    gap: float


@dataclass
class Wspd:
    tree: SplitTree
    s: float
    pairs: list[WspdPair] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.pairs)


def is_well_separated(tree: SplitTree, v: int, w: int, s: float) -> bool:
    """Separation test for two tree nodes.

    With c_v, r_v the enclosing ball of v's box (likewise w) and
    rho = max(r_v, r_w), the nodes are well separated iff
    |c_v c_w| - 2 rho >= s * rho and the inflated balls are disjoint
    (|c_v c_w| - 2 rho > 0). Two leaves are therefore always well separated.
    """
    ba = tree.node_ball(v)
    bb = tree.node_ball(w)
    rho = ba.radius if ba.radius >= bb.radius else bb.radius
    clearance = math.hypot(ba.cx - bb.cx, ba.cy - bb.cy) - 2.0 * rho
    return clearance > 0.0 and clearance >= s * rho


def _make_pair(tree: SplitTree, a: int, b: int) -> WspdPair:
    ba = tree.balls[a]
    bb = tree.balls[b]
    rho = max(ba.radius, bb.radius)
    return WspdPair(
        a=a,
        b=b,
        ball_a=Ball(ba.cx, ba.cy, rho),
        ball_b=Ball(bb.cx, bb.cy, rho),
        gap=rect_min_distance(tree.nodes[a].rect, tree.nodes[b].rect),
    )


def find_pairs(tree: SplitTree, v: int, w: int, s: float) -> list[WspdPair]:
    """All pairs separating S_v x S_w, for nodes with disjoint point sets.

    Emits {v, w} if well separated, otherwise splits whichever node has the
    larger box side (w on ties) and recurses into its children, left before
    right. Runs on an explicit stack in exactly the recursion's emission
    order.
    """
    va = tree.node(v)
    wb = tree.node(w)
    if v == w or set(va.point_indices) & set(wb.point_indices):
        raise ValueError(f"nodes {v} and {w} must have disjoint point sets")
    nodes = tree.nodes
    balls = tree.balls
    lmaxes = tree.lmaxes
    hypot = math.hypot

    out: list[WspdPair] = []
    stack = [(v, w)]
    while stack:
        a, b = stack.pop()
        ba = balls[a]
        bb = balls[b]
        rho = ba.radius if ba.radius >= bb.radius else bb.radius
        clearance = hypot(ba.cx - bb.cx, ba.cy - bb.cy) - 2.0 * rho
        if clearance > 0.0 and clearance >= s * rho:
            out.append(_make_pair(tree, a, b))
        elif lmaxes[a] <= lmaxes[b]:
            nb = nodes[b]
            stack.append((a, nb.right))
            stack.append((a, nb.left))
        else:
            na = nodes[a]
            stack.append((na.right, b))
            stack.append((na.left, b))
    return out


def compute_wspd(ps: PointSet, s: float) -> Wspd:
    """Decomposition of a point set: union of find_pairs over the children
    of every internal node, in node-construction order."""
    if s <= 0.0:
        raise ValueError(f"separation ratio must be positive, got {s}")
    tree = build_split_tree(ps)
    pairs: list[WspdPair] = []
    for nd in tree.nodes:
        if not nd.is_leaf:
            pairs.extend(find_pairs(tree, nd.left, nd.right, s))
    return Wspd(tree=tree, s=s, pairs=pairs)
