"""Command-line front door: generation, algorithm runs, verification, scene export.

Point files are CSV (one ``x,y`` per line, optional header) or JSON
(``{"points": [[x, y], ...]}``). Every algorithm sub-command reads a point
file and writes a Scene JSON document to --output or stdout.

Exit codes: 0 success, 2 unreadable input or invalid parameters, 3 internal
invariant violation (including verification failures).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import WellsepError
from .geometry import PointSet, Rect
from .pipeline import DEFAULT_ANN_S, DEFAULT_S, DEFAULT_T, compute_scene
from .pointgen import DISTRIBUTIONS, generate
from .verify import run_verification


def load_points(path: str) -> PointSet:
    """Read a point file, auto-detecting JSON vs CSV and a CSV header row."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        coords = obj.get("points")
        if not isinstance(coords, list):
            raise ValueError(f"{path}: expected a JSON object with a 'points' list")
        return PointSet.from_xy(coords)
    rows: list[tuple[float, float]] = []
    for lineno, line in enumerate(text.splitlines()):
        line = line.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) < 2:
            raise ValueError(f"{path}:{lineno + 1}: expected 'x,y'")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError:
            if not rows and lineno == 0:  # header row
                continue
            raise ValueError(f"{path}:{lineno + 1}: could not parse '{line}'") from None
    if not rows:
        raise ValueError(f"{path}: no points found")
    return PointSet.from_xy(rows)


def points_to_json(ps: PointSet) -> str:
    return json.dumps({"points": [[p.x, p.y] for p in ps]}, indent=2) + "\n"


def points_to_csv(ps: PointSet) -> str:
    return "x,y\n" + "".join(f"{p.x!r},{p.y!r}\n" for p in ps)


def _parse_bounds(text: str) -> Rect:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("bounds must be 'xmin,xmax,ymin,ymax'")
    try:
        xmin, xmax, ymin, ymax = (float(p) for p in parts)
        return Rect(xmin, xmax, ymin, ymax)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellsep",
        description="Split trees, well-separated pair decompositions, and their applications in the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="random seed where applicable")

    reads = argparse.ArgumentParser(add_help=False, parents=[common])
    reads.add_argument("--input", required=True, help="point file (CSV or JSON)")

    p = sub.add_parser("generate", parents=[common], help="generate a point file")
    p.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    p.add_argument("--n", type=int, required=True, help="number of points")
    p.add_argument("--bounds", type=_parse_bounds, default=Rect(0.0, 10.0, 0.0, 10.0),
                   help="xmin,xmax,ymin,ymax (default 0,10,0,10)")

    sub.add_parser("split-tree", parents=[reads], help="split tree of the input points")

    p = sub.add_parser("wspd", parents=[reads], help="well-separated pair decomposition")
    p.add_argument("--s", type=float, default=DEFAULT_S, help="separation ratio (default 2)")

    p = sub.add_parser("spanner", parents=[reads], help="t-spanner")
    p.add_argument("--t", type=float, default=DEFAULT_T, help="stretch factor (default 2)")

    sub.add_parser("closest-pair", parents=[reads], help="closest pair via a 2-spanner")

    p = sub.add_parser("k-closest", parents=[reads], help="k closest pairs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=float, default=DEFAULT_S, help="separation ratio (default 2)")

    p = sub.add_parser("ann", parents=[reads], help="all nearest neighbors")
    p.add_argument("--s", type=float, default=DEFAULT_ANN_S,
                   help="separation ratio, must exceed 2 (default 4)")

    p = sub.add_parser("amst", parents=[reads], help="t-approximate minimum spanning tree")
    p.add_argument("--t", type=float, default=DEFAULT_T, help="stretch factor (default 2)")

    p = sub.add_parser("verify", parents=[common],
                       help="compare every application against its brute-force oracle")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n", type=int, default=50, help="maximum points per trial")

    return parser


def _write(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "generate":
        ps = generate(args.dist, args.n, seed=args.seed, bounds=args.bounds)
        if args.output and args.output.endswith(".csv"):
            _write(points_to_csv(ps), args.output)
        else:
            _write(points_to_json(ps), args.output)
        return 0

    if args.command == "verify":
        report = run_verification(trials=args.trials, max_points=args.n, seed=args.seed)
        if args.output:
            _write(json.dumps(report.to_obj(), indent=2) + "\n", args.output)
            sys.stdout.write(report.to_text())
        else:
            sys.stdout.write(report.to_text())
        return 0 if report.ok else 3

    ps = load_points(args.input)
    scene = compute_scene(
        ps,
        args.command,
        s=getattr(args, "s", None),
        t=getattr(args, "t", None),
        k=getattr(args, "k", None),
    )
    _write(scene.to_json(), args.output)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (WellsepError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
