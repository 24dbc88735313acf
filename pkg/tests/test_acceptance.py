"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
summary lines as they complete.
"""

import dataclasses
import json
import time
from pathlib import Path

from wellsep import cli, oracle
from wellsep.geometry import Rect, dist
from wellsep.pointgen import generate
from wellsep.proximity import all_nearest_neighbors, closest_pair, k_closest_pairs
from wellsep.spanner import approx_mst, build_t_spanner, dilation, prim_mst
from wellsep.split_tree import build_split_tree
from wellsep.verify import run_verification
from wellsep.wspd import compute_wspd

BOUNDS = Rect(0.0, 100.0, 0.0, 100.0)
FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

REL_TOL = 1e-9


def board(n: int, seed: int, clustered: bool):
    return generate("clusters" if clustered else "uniform", n, seed=seed, bounds=BOUNDS)


def report(name: str, failures: list, detail: str) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"[{status}] {name}: {detail}")
    assert not failures, f"{name}: {len(failures)} failures, first: {failures[0]}"


def test_wspd_validity():
    start = time.perf_counter()
    failures = []
    checked = 0
    for i in range(200):
        n = 2 + (i * 31) % 63  # covers 2..64
        ps = board(n, 1000 + i, clustered=i % 2 == 1)
        for s in (0.5, 1.0, 2.0, 4.0, 10.0):
            rep = oracle.check_wspd(ps, compute_wspd(ps, s))
            checked += 1
            if not rep.valid:
                failures.append((i, n, s, rep.coverage_failures[:3], rep.separation_failures[:3]))
    elapsed = time.perf_counter() - start
    if elapsed >= 10.0:
        failures.append(("runtime", elapsed))
    report(
        "wspd-validity",
        failures,
        f"200 boards x 5 ratios, {checked} decompositions valid in {elapsed:.1f}s (budget 10s)",
    )


def test_spanner_stretch():
    start = time.perf_counter()
    failures = []
    for i in range(50):
        n = 4 + (i * 97) % 125  # sample of 4..128
        ps = board(n, 2000 + i, clustered=i % 2 == 1)
        for t in (1.5, 2.0, 3.0):
            measured = dilation(ps, build_t_spanner(ps, t))
            if measured > t + 1e-9:
                failures.append((i, n, t, measured))
    elapsed = time.perf_counter() - start
    if elapsed >= 60.0:
        failures.append(("runtime", elapsed))
    report(
        "spanner-stretch",
        failures,
        f"50 boards x t in (1.5, 2, 3), dilation <= t in {elapsed:.1f}s (budget 60s)",
    )


def test_closest_pair_exact():
    failures = []
    for i in range(1000):
        n = 2 + (i * 37) % 99  # covers 2..100
        ps = board(n, 3000 + i, clustered=i % 2 == 1)
        got = closest_pair(ps)
        want = oracle.brute_closest_pair(ps)
        if got != want:
            failures.append((i, n, got, want))
    report("closest-pair", failures, "1000 trials, exact (i, j, d) match with the oracle")


def test_k_closest_pairs_multiset():
    failures = []
    k_cycle = (1, 5, 25, None)  # None = all pairs
    s_cycle = (1.0, 2.0, 8.0)
    for i in range(300):
        n = 2 + (i * 23) % 59  # covers 2..60
        total = n * (n - 1) // 2
        k = k_cycle[i % 4]
        k = total if k is None else min(k, total)
        s = s_cycle[i % 3]
        ps = board(n, 4000 + i, clustered=i % 2 == 1)
        got = [p.d for p in k_closest_pairs(ps, k, s=s)]
        want = [p.d for p in oracle.brute_k_closest(ps, k)]
        if len(got) != k or any(abs(a - b) > 1e-12 for a, b in zip(got, want)):
            failures.append((i, n, k, s))
    report(
        "k-closest-pairs",
        failures,
        "300 trials over k in {1, 5, 25, all} and s in {1, 2, 8}, distance multisets match",
    )


def test_all_nearest_neighbors_exact():
    failures = []
    for i in range(300):
        n = 2 + (i * 29) % 79  # covers 2..80
        ps = board(n, 5000 + i, clustered=i % 2 == 1)
        if all_nearest_neighbors(ps, s=4.0) != oracle.brute_ann(ps):
            failures.append((i, n))
    report("all-nearest-neighbors", failures, "300 trials at s=4, exact neighbor maps")


def test_approximate_mst():
    failures = []
    enumerated = 0
    for i in range(200):
        n = 2 + i % 39  # covers 2..40
        t = 1.5 if i % 2 == 0 else 2.0
        ps = board(n, 6000 + i, clustered=i % 3 == 1)
        spanner = build_t_spanner(ps, t)
        tree = prim_mst(spanner)
        exact = oracle.brute_emst(ps).weight
        if not exact * (1 - REL_TOL) <= tree.weight <= t * exact * (1 + REL_TOL):
            failures.append((i, n, t, tree.weight, exact))
        if n <= 9:
            best = oracle.exhaustive_min_spanning_weight(spanner.n, spanner.edge_list())
            enumerated += 1
            if abs(tree.weight - best) > REL_TOL * max(1.0, best):
                failures.append((i, n, t, "prim vs enumeration", tree.weight, best))
    report(
        "approximate-mst",
        failures,
        f"200 trials with t in (1.5, 2), weight sandwich holds; "
        f"{enumerated} small sub-trials matched exhaustive enumeration",
    )


def test_split_tree_structure():
    failures = []
    for i in range(60):
        n = 1 + (i * 13) % 64  # covers 1..64
        ps = board(n, 7000 + i, clustered=i % 2 == 1)
        tree = build_split_tree(ps)
        leaves = [nd for nd in tree.nodes if nd.is_leaf]
        internals = [nd for nd in tree.nodes if not nd.is_leaf]
        if len(leaves) != n or len(internals) != n - 1:
            failures.append((i, n, "node counts"))
            continue
        eps = 1e-12
        for nd in tree.nodes:
            if any(not nd.rect.contains(ps[j], slack=eps) for j in nd.point_indices):
                failures.append((i, n, nd.id, "containment"))
            if nd.is_leaf:
                continue
            left, right = tree.nodes[nd.left], tree.nodes[nd.right]
            if sorted(left.point_indices + right.point_indices) != list(nd.point_indices):
                failures.append((i, n, nd.id, "partition"))
            for child in (left, right):
                if (
                    child.rect.xmin < nd.rect.xmin - eps
                    or child.rect.xmax > nd.rect.xmax + eps
                    or child.rect.ymin < nd.rect.ymin - eps
                    or child.rect.ymax > nd.rect.ymax + eps
                ):
                    failures.append((i, n, nd.id, "nesting"))
        rebuilt = build_split_tree(ps)
        serial = json.dumps([dataclasses.asdict(nd) for nd in tree.nodes])
        if serial != json.dumps([dataclasses.asdict(nd) for nd in rebuilt.nodes]):
            failures.append((i, n, "rebuild determinism"))
    report(
        "split-tree-structure",
        failures,
        "60 boards: leaf/internal counts, partition, nesting, byte-stable rebuilds",
    )


def test_wspd_size_monotone_in_s():
    failures = []
    ladder = (0.5, 1.0, 2.0, 4.0, 10.0)
    for i in range(50):
        n = 2 + (i * 11) % 39  # covers 2..40
        ps = board(n, 8000 + i, clustered=i % 2 == 1)
        sizes = [compute_wspd(ps, s).size for s in ladder]
        if sizes != sorted(sizes):
            failures.append((i, n, sizes))
    report("wspd-monotonicity", failures, "50 boards, pair count nondecreasing over the s ladder")


def test_cli_golden_scenes(tmp_path):
    failures = []
    compared = 0
    for golden in sorted(GOLDEN.glob("*.json")):
        board_name, command = golden.stem.split("__")
        src = next(FIXTURES.glob(f"{board_name}.*"))
        n = len(cli.load_points(str(src)))
        argv = [command, "--input", str(src), "--output", str(tmp_path / golden.name)]
        if command == "wspd":
            argv += ["--s", "2"]
        elif command in ("spanner", "amst"):
            argv += ["--t", "2"]
        elif command == "k-closest":
            argv += ["--k", str(min(3, n * (n - 1) // 2)), "--s", "2"]
        elif command == "ann":
            argv += ["--s", "4"]
        code = cli.main(argv)
        if code != 0:
            failures.append((golden.name, f"exit {code}"))
            continue
        if (tmp_path / golden.name).read_bytes() != golden.read_bytes():
            failures.append((golden.name, "byte mismatch"))
        compared += 1
    if compared != 35:
        failures.append(("coverage", f"expected 35 golden scenes, compared {compared}"))
    report("cli-golden-scenes", failures, f"{compared} scenes reproduced byte-identically")


def test_cli_verify_sweep():
    report_obj = run_verification(trials=100, max_points=50, seed=1)
    failures = [] if report_obj.ok else [
        (f.trial, f.check, f.detail) for f in report_obj.failures
    ]
    report(
        "cli-verify-sweep",
        failures,
        "verify --trials 100 --n 50 --seed 1: all five oracle comparisons clean",
    )
