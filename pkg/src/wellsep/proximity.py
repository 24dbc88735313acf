"""Closest pair, k-closest pairs, and all-nearest-neighbors via decompositions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidK, NeedTwoPoints, SeparationTooSmall
from .geometry import PointSet, dist
from .spanner import Graph, build_t_spanner
from .wspd import Wspd, compute_wspd

# Map from each point index to the index of its nearest neighbor.
NeighborMap = dict[int, int]


@dataclass(frozen=True)
class IndexPair:
    """Unordered point pair (i < j) with its cached distance."""

    i: int
    j: int
    d: float


def _pair_key(p: IndexPair) -> tuple[float, int, int]:
    return (p.d, p.i, p.j)


def min_weight_edge(g: Graph) -> IndexPair:
    """Smallest-weight edge of a graph; ties resolve to the smallest (i, j)."""
    if not g.edges:
        raise NeedTwoPoints("graph has no edges")
    return min(
        (IndexPair(i, j, w) for (i, j), w in g.edges.items()),
        key=_pair_key,
    )


def closest_pair(ps: PointSet) -> IndexPair:
    """Minimum-distance pair, found by scanning the edges of a 2-spanner.

    Every minimum-distance pair shows up as a spanner edge (its separating
    pair is singleton-singleton at this ratio), so the scan is exact.
    """
    if len(ps) < 2:
        raise NeedTwoPoints("closest pair needs at least two points")
    return min_weight_edge(build_t_spanner(ps, 2.0))


def k_closest_from_wspd(w: Wspd, k: int) -> list[IndexPair]:
    """The k smallest-distance pairs, extracted from an existing decomposition.

    Orders the decomposition pairs by box gap, finds the shortest prefix
    whose cross-pair count reaches k, widens it to every pair whose gap is
    within the (1 + 4/s) factor of that prefix's last gap, and returns the k
    best cross pairs of the widened prefix, sorted by (distance, i, j). The
    widened prefix provably contains the true k closest pairs.
    """
    ps = w.tree.source
    n = len(ps)
    total = n * (n - 1) // 2
    if not 1 <= k <= total:
        raise InvalidK(f"k must be in 1..{total}, got {k}")
    nodes = w.tree.nodes
    by_gap = sorted(w.pairs, key=lambda pair: pair.gap)

    cross = 0
    ell = 0
    for pair in by_gap:
        ell += 1
        cross += nodes[pair.a].size * nodes[pair.b].size
        if cross >= k:
            break
    r = by_gap[ell - 1].gap
    threshold = (1.0 + 4.0 / w.s) * r
    ell_prime = sum(1 for pair in by_gap if pair.gap <= threshold)
    assert ell_prime >= ell, "gap ordering violated"

    pts = ps.points
    pool: list[IndexPair] = []
    for pair in by_gap[:ell_prime]:
        for p in nodes[pair.a].point_indices:
            pp = pts[p]
            for q in nodes[pair.b].point_indices:
                if p < q:
                    pool.append(IndexPair(p, q, dist(pp, pts[q])))
                else:
                    pool.append(IndexPair(q, p, dist(pp, pts[q])))
    assert len(pool) >= k, "candidate pool smaller than k"
    pool.sort(key=_pair_key)
    return pool[:k]


def k_closest_pairs(ps: PointSet, k: int, s: float = 2.0) -> list[IndexPair]:
    """The k smallest-distance point pairs, sorted by (distance, i, j)."""
    n = len(ps)
    total = n * (n - 1) // 2
    if not 1 <= k <= total:
        raise InvalidK(f"k must be in 1..{total}, got {k}")
    if s <= 0.0:
        raise ValueError(f"separation ratio must be positive, got {s}")
    return k_closest_from_wspd(compute_wspd(ps, s), k)


def nearest_neighbors_from_wspd(w: Wspd) -> NeighborMap:
    """All nearest neighbors from an existing decomposition with s > 2.

    For each point p, the far sides of all pairs whose near side is the
    singleton {p} are guaranteed (for s > 2) to contain p's nearest
    neighbor, so an exhaustive scan of that candidate set is exact. Ties go
    to the smaller index.
    """
    ps = w.tree.source
    n = len(ps)
    if n < 2:
        raise NeedTwoPoints("all-nearest-neighbors needs at least two points")
    if w.s <= 2.0:
        raise SeparationTooSmall(f"all-nearest-neighbors needs s > 2, got {w.s}")
    nodes = w.tree.nodes
    candidates: list[list[int]] = [[] for _ in range(n)]
    for pair in w.pairs:
        a_idx = nodes[pair.a].point_indices
        b_idx = nodes[pair.b].point_indices
        if len(a_idx) == 1:
            candidates[a_idx[0]].extend(b_idx)
        if len(b_idx) == 1:
            candidates[b_idx[0]].extend(a_idx)

    pts = ps.points
    out: NeighborMap = {}
    for p in range(n):
        cand = candidates[p]
        assert cand, "candidate set must not be empty when s > 2"
        pp = pts[p]
        out[p] = min(cand, key=lambda q: (dist(pp, pts[q]), q))
    return out


def all_nearest_neighbors(ps: PointSet, s: float = 4.0) -> NeighborMap:
    """Nearest neighbor of every point; ties go to the smaller index."""
    if len(ps) < 2:
        raise NeedTwoPoints("all-nearest-neighbors needs at least two points")
    if s <= 2.0:
        raise SeparationTooSmall(f"all-nearest-neighbors needs s > 2, got {s}")
    return nearest_neighbors_from_wspd(compute_wspd(ps, s))
