"""Serializable scene: everything the CLI emits and the browser UI draws.

Schema (version 1), all fields but "schema" and "points" optional:

    {
      "schema": 1,
      "points":      [{"id": 0, "x": 0.0, "y": 0.0}, ...],
      "split_rects": [{"node_id": 0, "depth": 0,
                       "xmin": ..., "xmax": ..., "ymin": ..., "ymax": ...}, ...],
      "wspd":    {"s": 2.0, "pairs": [{"a_ids": [...], "b_ids": [...],
                  "ball_a": {"cx": ..., "cy": ..., "r": ...},
                  "ball_b": {...}, "gap": ...}, ...]},
      "spanner": {"t": 2.0, "edges": [[i, j], ...]},
      "results": {"closest_pair": {"i":, "j":, "d":},
                  "k_closest": {"k":, "pairs": [{"i":, "j":, "d":}, ...]},
                  "ann": [nn_of_0, nn_of_1, ...],
                  "amst": {"edges": [[i, j], ...], "weight": ...}}
    }

Serialization is deterministic: fixed key order, shortest round-trip float
representation (Python's repr), two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .geometry import PointSet
from .spanner import Graph
from .split_tree import SplitTree
from .wspd import Wspd

SCHEMA_VERSION = 1


@dataclass
class Scene:
    points: list[dict]
    split_rects: Optional[list[dict]] = None
    wspd: Optional[dict] = None
    spanner: Optional[dict] = None
    results: Optional[dict] = None

    def to_obj(self) -> dict:
        obj: dict[str, Any] = {"schema": SCHEMA_VERSION, "points": self.points}
        if self.split_rects is not None:
            obj["split_rects"] = self.split_rects
        if self.wspd is not None:
            obj["wspd"] = self.wspd
        if self.spanner is not None:
            obj["spanner"] = self.spanner
        if self.results is not None:
            obj["results"] = self.results
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2) + "\n"

    @classmethod
    def from_obj(cls, obj: dict) -> "Scene":
        if obj.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported scene schema {obj.get('schema')!r}")
        scene = cls(
            points=obj["points"],
            split_rects=obj.get("split_rects"),
            wspd=obj.get("wspd"),
            spanner=obj.get("spanner"),
            results=obj.get("results"),
        )
        scene.validate_indices()
        return scene

    @classmethod
    def from_json(cls, text: str) -> "Scene":
        return cls.from_obj(json.loads(text))

    def validate_indices(self) -> None:
        """Every point index referenced anywhere must exist in ``points``."""
        n = len(self.points)

        def check(idx: Any) -> None:
            if not isinstance(idx, int) or not 0 <= idx < n:
                raise ValueError(f"scene references unknown point index {idx!r}")

        if self.wspd is not None:
            for pair in self.wspd["pairs"]:
                for idx in pair["a_ids"]:
                    check(idx)
                for idx in pair["b_ids"]:
                    check(idx)
        if self.spanner is not None:
            for i, j in self.spanner["edges"]:
                check(i)
                check(j)
        results = self.results or {}
        if "closest_pair" in results:
            check(results["closest_pair"]["i"])
            check(results["closest_pair"]["j"])
        if "k_closest" in results:
            for pair in results["k_closest"]["pairs"]:
                check(pair["i"])
                check(pair["j"])
        if "ann" in results:
            for idx in results["ann"]:
                check(idx)
        if "amst" in results:
            for i, j in results["amst"]["edges"]:
                check(i)
                check(j)


def points_payload(ps: PointSet) -> list[dict]:
    return [{"id": i, "x": p.x, "y": p.y} for i, p in enumerate(ps)]


def split_rects_payload(tree: SplitTree) -> list[dict]:
    depths = tree.depths()
    return [
        {
            "node_id": nd.id,
            "depth": depths[nd.id],
            "xmin": nd.rect.xmin,
            "xmax": nd.rect.xmax,
            "ymin": nd.rect.ymin,
            "ymax": nd.rect.ymax,
        }
        for nd in tree.nodes
    ]


def wspd_payload(w: Wspd) -> dict:
    nodes = w.tree.nodes
    pairs = [
        {
            "a_ids": list(nodes[pair.a].point_indices),
            "b_ids": list(nodes[pair.b].point_indices),
            "ball_a": {"cx": pair.ball_a.cx, "cy": pair.ball_a.cy, "r": pair.ball_a.radius},
            "ball_b": {"cx": pair.ball_b.cx, "cy": pair.ball_b.cy, "r": pair.ball_b.radius},
            "gap": pair.gap,
        }
        for pair in w.pairs
    ]
    return {"s": w.s, "pairs": pairs}


def spanner_payload(t: float, g: Graph) -> dict:
    return {"t": t, "edges": [[i, j] for i, j, _ in g.edge_list()]}
