#!/usr/bin/env python3
"""Regenerate the golden scene files under tests/golden/ via the CLI.

Run from the repository root after an intentional output-format change, then
review the diff before committing.
"""

from __future__ import annotations

import sys
from pathlib import Path

from wellsep.cli import main

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"

BOARDS = {
    "board_pair": "board_pair.json",
    "board_line": "board_line.csv",
    "board_trace": "board_trace.json",
    "board_grid": "board_grid.json",
    "board_uniform": "board_uniform.json",
}


def commands_for(board: str, n: int) -> dict[str, list[str]]:
    k = str(min(3, n * (n - 1) // 2))
    return {
        "split-tree": ["split-tree"],
        "wspd": ["wspd", "--s", "2"],
        "spanner": ["spanner", "--t", "2"],
        "closest-pair": ["closest-pair"],
        "k-closest": ["k-closest", "--k", k, "--s", "2"],
        "ann": ["ann", "--s", "4"],
        "amst": ["amst", "--t", "2"],
    }


def board_size(path: Path) -> int:
    from wellsep.cli import load_points

    return len(load_points(str(path)))


def regen() -> int:
    GOLDEN.mkdir(exist_ok=True)
    count = 0
    for board, filename in BOARDS.items():
        src = FIXTURES / filename
        n = board_size(src)
        for name, argv in commands_for(board, n).items():
            out = GOLDEN / f"{board}__{name}.json"
            code = main([*argv, "--input", str(src), "--output", str(out)])
            if code != 0:
                print(f"FAILED: {board} {name} (exit {code})", file=sys.stderr)
                return code
            count += 1
    print(f"wrote {count} golden scenes to {GOLDEN}")
    return 0


if __name__ == "__main__":
    sys.exit(regen())
