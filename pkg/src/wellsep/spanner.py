"""Euclidean graphs over a point set: spanners, dilation, Prim, approximate MST."""

from __future__ import annotations

import heapq
from typing import Iterable

from .errors import DisconnectedGraph, InvalidStretchFactor, NeedTwoPoints
from .geometry import PointSet, dist
from .wspd import Wspd, compute_wspd


class Graph:
    """Undirected weighted graph on point indices 0..n-1, no loops or duplicates."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.edges: dict[tuple[int, int], float] = {}
        for i, j, w in edges:
            self.add_edge(i, j, w)

    def add_edge(self, i: int, j: int, weight: float) -> None:
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
        key = (i, j) if i < j else (j, i)
        self.edges[key] = weight

    def has_edge(self, i: int, j: int) -> bool:
        key = (i, j) if i < j else (j, i)
        return key in self.edges

    def edge_list(self) -> list[tuple[int, int, float]]:
        """Edges as (i, j, weight) with i < j, sorted by endpoints."""
        return [(i, j, self.edges[(i, j)]) for i, j in sorted(self.edges)]

    def adjacency(self) -> list[list[tuple[int, float]]]:
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for (i, j), w in sorted(self.edges.items()):
            adj[i].append((j, w))
            adj[j].append((i, w))
        return adj

    def total_weight(self) -> float:
        return sum(self.edges.values())

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


class Tree(Graph):
    """Spanning tree: a connected graph with exactly n - 1 edges."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()):
        super().__init__(n, edges)
        if len(self.edges) != max(n - 1, 0) or not self.is_connected():
            raise ValueError("edge set is not a spanning tree")

    @property
    def weight(self) -> float:
        return self.total_weight()


def separation_for_stretch(t: float) -> float:
    """Separation ratio that makes the decomposition graph a t-spanner."""
    if t <= 1.0:
        raise InvalidStretchFactor(f"stretch factor must exceed 1, got {t}")
    return 4.0 * (t + 1.0) / (t - 1.0)


def spanner_from_wspd(w: Wspd) -> Graph:
    """One edge per pair, joining the smallest point index of each side."""
    ps = w.tree.source
    nodes = w.tree.nodes
    g = Graph(len(ps))
    for pair in w.pairs:
        i = nodes[pair.a].point_indices[0]
        j = nodes[pair.b].point_indices[0]
        if not g.has_edge(i, j):
            g.add_edge(i, j, dist(ps[i], ps[j]))
    return g


def build_t_spanner(ps: PointSet, t: float) -> Graph:
    """Spanner whose shortest paths stretch Euclidean distances by at most t."""
    return spanner_from_wspd(compute_wspd(ps, separation_for_stretch(t)))


def dilation(ps: PointSet, g: Graph) -> float:
    """Worst ratio of graph shortest-path length to Euclidean distance.

    Shortest paths come from one Dijkstra run per source (scipy's sparse
    csgraph implementation); the Euclidean side reuses the same dist() as the
    edge weights so a complete graph measures exactly 1.
    """
    import numpy as np
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import dijkstra

    n = len(ps)
    if n < 2:
        raise NeedTwoPoints("dilation needs at least two points")
    if g.n != n:
        raise ValueError("graph vertex count does not match the point set")
    rows, cols, weights = [], [], []
    for (i, j), w in g.edges.items():
        rows.append(i)
        cols.append(j)
        weights.append(w)
    mat = csr_matrix((weights, (rows, cols)), shape=(n, n))
    d = dijkstra(mat, directed=False)
    if np.isinf(d).any():
        raise DisconnectedGraph("graph is disconnected, dilation is infinite")

    worst = 1.0
    pts = ps.points
    for i in range(n):
        di = d[i]
        pi = pts[i]
        for j in range(i + 1, n):
            ratio = di[j] / dist(pi, pts[j])
            if ratio > worst:
                worst = ratio
    return worst


def prim_mst(g: Graph) -> Tree:
    """Minimum spanning tree of a connected graph.

    Grows from vertex 0; equal-weight candidates resolve to the smallest
    (min endpoint, max endpoint) so the output tree is deterministic.
    """
    n = g.n
    if n == 0:
        raise ValueError("cannot span an empty graph")
    adj = g.adjacency()
    in_tree = [False] * n
    in_tree[0] = True
    heap: list[tuple[float, int, int]] = []
    for v, w in adj[0]:
        heapq.heappush(heap, (w, min(0, v), max(0, v)))
    edges: list[tuple[int, int, float]] = []
    while heap and len(edges) < n - 1:
        w, i, j = heapq.heappop(heap)
        if in_tree[i] and in_tree[j]:
            continue
        u = j if in_tree[i] else i
        in_tree[u] = True
        edges.append((i, j, w))
        for v, wv in adj[u]:
            if not in_tree[v]:
                heapq.heappush(heap, (wv, min(u, v), max(u, v)))
    if len(edges) < n - 1:
        raise DisconnectedGraph("graph is disconnected, no spanning tree exists")
    return Tree(n, edges)


def approx_mst(ps: PointSet, t: float) -> Tree:
    """Spanning tree at most t times heavier than the exact Euclidean MST."""
    return prim_mst(build_t_spanner(ps, t))
