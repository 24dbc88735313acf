"""Single entry point turning (points, mode, params) into a Scene.

Both the CLI and the browser bridge go through ``compute_scene``, which is
what guarantees that the UI shows exactly what the CLI would emit for the
same inputs.
"""

from __future__ import annotations

from typing import Optional

from .geometry import PointSet
from .proximity import k_closest_from_wspd, min_weight_edge, nearest_neighbors_from_wspd
from .scene import Scene, points_payload, spanner_payload, split_rects_payload, wspd_payload
from .spanner import prim_mst, separation_for_stretch, spanner_from_wspd
from .split_tree import build_split_tree
from .wspd import compute_wspd

MODES = ("split-tree", "wspd", "spanner", "closest-pair", "k-closest", "ann", "amst")

DEFAULT_S = 2.0
DEFAULT_T = 2.0
DEFAULT_ANN_S = 4.0


def compute_scene(
    ps: PointSet,
    mode: str,
    s: Optional[float] = None,
    t: Optional[float] = None,
    k: Optional[int] = None,
) -> Scene:
    """Run one algorithm mode and package every structure it produced."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {', '.join(MODES)}")
    scene = Scene(points=points_payload(ps))

    if mode == "split-tree":
        scene.split_rects = split_rects_payload(build_split_tree(ps))
        return scene

    if mode == "wspd":
        w = compute_wspd(ps, DEFAULT_S if s is None else s)
        scene.split_rects = split_rects_payload(w.tree)
        scene.wspd = wspd_payload(w)
        return scene

    if mode == "spanner":
        t_eff = DEFAULT_T if t is None else t
        w = compute_wspd(ps, separation_for_stretch(t_eff))
        g = spanner_from_wspd(w)
        scene.split_rects = split_rects_payload(w.tree)
        scene.wspd = wspd_payload(w)
        scene.spanner = spanner_payload(t_eff, g)
        return scene

    if mode == "closest-pair":
        # the closest pair falls out of a 2-spanner's edge scan
        w = compute_wspd(ps, separation_for_stretch(2.0))
        g = spanner_from_wspd(w)
        best = min_weight_edge(g)
        scene.split_rects = split_rects_payload(w.tree)
        scene.wspd = wspd_payload(w)
        scene.spanner = spanner_payload(2.0, g)
        scene.results = {"closest_pair": {"i": best.i, "j": best.j, "d": best.d}}
        return scene

    if mode == "k-closest":
        if k is None:
            raise ValueError("k-closest mode needs k")
        w = compute_wspd(ps, DEFAULT_S if s is None else s)
        pairs = k_closest_from_wspd(w, k)
        scene.split_rects = split_rects_payload(w.tree)
        scene.wspd = wspd_payload(w)
        scene.results = {
            "k_closest": {
                "k": k,
                "pairs": [{"i": p.i, "j": p.j, "d": p.d} for p in pairs],
            }
        }
        return scene

    if mode == "ann":
        w = compute_wspd(ps, DEFAULT_ANN_S if s is None else s)
        nn = nearest_neighbors_from_wspd(w)
        scene.split_rects = split_rects_payload(w.tree)
        scene.wspd = wspd_payload(w)
        scene.results = {"ann": [nn[i] for i in range(len(ps))]}
        return scene

    # amst
    t_eff = DEFAULT_T if t is None else t
    w = compute_wspd(ps, separation_for_stretch(t_eff))
    g = spanner_from_wspd(w)
    tree = prim_mst(g)
    scene.split_rects = split_rects_payload(w.tree)
    scene.wspd = wspd_payload(w)
    scene.spanner = spanner_payload(t_eff, g)
    scene.results = {
        "amst": {
            "edges": [[i, j] for i, j, _ in tree.edge_list()],
            "weight": tree.weight,
        }
    }
    return scene
