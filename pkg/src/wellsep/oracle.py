"""Brute-force reference implementations for property tests and verification.

Everything here is deliberately naive (quadratic scans, exhaustive
enumeration) and kept independent of the fast paths: the only shared code is
the geometry primitives and the plain result containers (IndexPair, Tree).
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraph, EmptyPointSet, InvalidK, NeedTwoPoints
from .geometry import PointSet, bounding_box, dist, enclosing_ball
from .proximity import IndexPair, NeighborMap
from .spanner import Tree
from .wspd import Wspd

# Above this many edge subsets the exhaustive enumerator refuses to run.
SUBSET_ENUMERATION_LIMIT = 2_000_000


def brute_closest_pair(ps: PointSet) -> IndexPair:
    """Full O(n^2) scan; ties resolve to the smallest (i, j)."""
    n = len(ps)
    if n < 2:
        raise NeedTwoPoints("closest pair needs at least two points")
    pts = ps.points
    best: IndexPair | None = None
    for i in range(n):
        pi = pts[i]
        for j in range(i + 1, n):
            d = dist(pi, pts[j])
            if best is None or (d, i, j) < (best.d, best.i, best.j):
                best = IndexPair(i, j, d)
    return best


def brute_k_closest(ps: PointSet, k: int) -> list[IndexPair]:
    """All pairs sorted by (distance, i, j); first k."""
    n = len(ps)
    total = n * (n - 1) // 2
    if not 1 <= k <= total:
        raise InvalidK(f"k must be in 1..{total}, got {k}")
    pts = ps.points
    pairs = [
        IndexPair(i, j, dist(pts[i], pts[j]))
        for i in range(n)
        for j in range(i + 1, n)
    ]
    pairs.sort(key=lambda p: (p.d, p.i, p.j))
    return pairs[:k]


def brute_ann(ps: PointSet) -> NeighborMap:
    """Per-point full scan; ties resolve to the smallest index."""
    n = len(ps)
    if n < 2:
        raise NeedTwoPoints("nearest neighbors need at least two points")
    pts = ps.points
    out: NeighborMap = {}
    for i in range(n):
        pi = pts[i]
        out[i] = min(
            (q for q in range(n) if q != i),
            key=lambda q: (dist(pi, pts[q]), q),
        )
    return out


def brute_emst(ps: PointSet) -> Tree:
    """Prim over the implicit complete Euclidean graph.

    Uses the same (weight, min endpoint, max endpoint) tie rule as the main
    spanner module so tree comparisons can be exact, but shares none of its
    code.
    """
    n = len(ps)
    if n == 0:
        raise EmptyPointSet("cannot span zero points")
    pts = ps.points
    in_tree = [False] * n
    in_tree[0] = True
    heap = [(dist(pts[0], pts[v]), 0, v) for v in range(1, n)]
    heapq.heapify(heap)
    edges: list[tuple[int, int, float]] = []
    while heap and len(edges) < n - 1:
        w, i, j = heapq.heappop(heap)
        if in_tree[i] and in_tree[j]:
            continue
        u = j if in_tree[i] else i
        in_tree[u] = True
        edges.append((i, j, w))
        pu = pts[u]
        for v in range(n):
            if not in_tree[v]:
                d = dist(pu, pts[v])
                heapq.heappush(heap, (d, u, v) if u < v else (d, v, u))
    return Tree(n, edges)


@dataclass
class WspdCheckReport:
    """Outcome of validating a decomposition against its defining conditions.

    ``coverage`` maps every unordered point pair (i, j), i < j, to the number
    of decomposition pairs separating it (must be exactly 1); ``separation``
    holds the per-pair result of an independently recomputed separation test.
    """

    n: int
    s: float
    pair_count: int
    coverage: dict[tuple[int, int], int]
    separation: list[bool]

    @property
    def coverage_failures(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for (i, j), c in sorted(self.coverage.items()) if c != 1]

    @property
    def separation_failures(self) -> list[int]:
        return [idx for idx, ok in enumerate(self.separation) if not ok]

    @property
    def valid(self) -> bool:
        return not self.coverage_failures and not self.separation_failures


def check_wspd(ps: PointSet, w: Wspd) -> WspdCheckReport:
    """Validate both decomposition conditions by brute force.

    The separation test is recomputed from scratch: each side's box comes
    from its own point indices (not the stored node rect), then the inflated
    enclosing balls must be disjoint and s times their radius apart.
    """
    n = len(ps)
    pts = ps.points
    coverage = {(i, j): 0 for i in range(n) for j in range(i + 1, n)}
    separation: list[bool] = []
    nodes = w.tree.nodes
    for pair in w.pairs:
        a_idx = nodes[pair.a].point_indices
        b_idx = nodes[pair.b].point_indices
        for p in a_idx:
            for q in b_idx:
                key = (p, q) if p < q else (q, p)
                if key in coverage:
                    coverage[key] += 1
        ball_a = enclosing_ball(bounding_box([pts[i] for i in a_idx]))
        ball_b = enclosing_ball(bounding_box([pts[i] for i in b_idx]))
        rho = max(ball_a.radius, ball_b.radius)
        clearance = math.hypot(ball_a.cx - ball_b.cx, ball_a.cy - ball_b.cy) - 2.0 * rho
        separation.append(clearance > 0.0 and clearance >= w.s * rho)
    return WspdCheckReport(
        n=n, s=w.s, pair_count=len(w.pairs), coverage=coverage, separation=separation
    )


def exhaustive_min_spanning_weight(n: int, edges: Iterable[tuple[int, int, float]]) -> float:
    """Minimum spanning-tree weight by exhaustive enumeration.

    For n <= 9 this enumerates every one of the n^(n-2) labeled trees via
    Prufer sequences (vectorized) and keeps those whose edges all exist in
    the graph; beyond that it falls back to checking every (n-1)-edge subset,
    which is only feasible for sparse graphs.
    """
    edge_list = list(edges)
    if n <= 0:
        raise ValueError("need at least one vertex")
    if n == 1:
        return 0.0
    if n == 2:
        for i, j, w in edge_list:
            if {i, j} == {0, 1}:
                return w
        raise DisconnectedGraph("two vertices with no edge between them")
    if n <= 9:
        return _min_weight_by_prufer(n, edge_list)
    return _min_weight_by_edge_subsets(n, edge_list)


_prufer_scan_compiled = None


def _min_weight_by_prufer(n: int, edges: Sequence[tuple[int, int, float]]) -> float:
    global _prufer_scan_compiled
    if _prufer_scan_compiled is None:
        from numba import njit

        _prufer_scan_compiled = njit(cache=True)(_prufer_scan)

    weight = np.full((n, n), np.inf)
    present = np.zeros((n, n), dtype=np.bool_)
    for i, j, w in edges:
        weight[i, j] = weight[j, i] = w
        present[i, j] = present[j, i] = True
    best = float(_prufer_scan_compiled(n, weight, present))
    if math.isinf(best):
        raise DisconnectedGraph("no spanning tree exists")
    return best


def _prufer_scan(n, weight, present):
    """Walk every labeled tree on n vertices by decoding all n^(n-2) Prufer
    sequences (linear-time pointer decode); keep the lightest one whose edges
    all exist."""
    length = n - 2
    count = n**length
    seq = np.empty(length, np.int64)
    degree = np.empty(n, np.int64)
    best = np.inf
    for code in range(count):
        c = code
        for t in range(length):
            seq[t] = c % n
            c //= n
        for v in range(n):
            degree[v] = 1
        for t in range(length):
            degree[seq[t]] += 1

        total = 0.0
        ok = True
        ptr = 0
        while degree[ptr] != 1:
            ptr += 1
        bounce = -1
        for t in range(length):
            a = seq[t]
            if bounce >= 0:
                leaf = bounce
                bounce = -1
            else:
                leaf = ptr
                ptr += 1
                while ptr < n and degree[ptr] != 1:
                    ptr += 1
            if not present[leaf, a]:
                ok = False
                break
            total += weight[leaf, a]
            degree[leaf] -= 1
            degree[a] -= 1
            if degree[a] == 1 and a < ptr:
                bounce = a
        if not ok or total >= best:
            continue
        u = -1
        v = -1
        for x in range(n):
            if degree[x] == 1:
                if u < 0:
                    u = x
                else:
                    v = x
        if present[u, v]:
            total += weight[u, v]
            if total < best:
                best = total
    return best


def _min_weight_by_edge_subsets(n: int, edges: Sequence[tuple[int, int, float]]) -> float:
    m = len(edges)
    if m < n - 1:
        raise DisconnectedGraph("not enough edges for a spanning tree")
    if math.comb(m, n - 1) > SUBSET_ENUMERATION_LIMIT:
        raise ValueError(
            f"{math.comb(m, n - 1)} edge subsets is too many to enumerate"
        )
    best = math.inf
    for subset in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merged = 0
        for i, j, _ in subset:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                merged += 1
        if merged == n - 1:
            best = min(best, sum(w for _, _, w in subset))
    if math.isinf(best):
        raise DisconnectedGraph("no spanning tree exists")
    return best
