"""Randomized sweeps comparing every application against its brute-force oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import oracle
from .geometry import Rect
from .pointgen import generate
from .proximity import all_nearest_neighbors, closest_pair, k_closest_pairs
from .spanner import approx_mst
from .wspd import compute_wspd

CHECKS = ("wspd", "closest_pair", "k_closest", "ann", "amst")

_BOUNDS = Rect(0.0, 100.0, 0.0, 100.0)
_REL_TOL = 1e-9


@dataclass
class Failure:
    trial: int
    check: str
    detail: str


@dataclass
class VerificationReport:
    trials: int
    max_points: int
    seed: int
    passes: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_obj(self) -> dict:
        return {
            "trials": self.trials,
            "max_points": self.max_points,
            "seed": self.seed,
            "passes": dict(self.passes),
            "failures": [
                {"trial": f.trial, "check": f.check, "detail": f.detail}
                for f in self.failures
            ],
            "ok": self.ok,
        }

    def to_text(self) -> str:
        lines = [
            f"verification: {self.trials} trials, 2..{self.max_points} points, seed {self.seed}"
        ]
        for check in CHECKS:
            lines.append(f"  {check:<13} {self.passes[check]}/{self.trials} ok")
        for f in self.failures:
            lines.append(f"  FAIL trial {f.trial} {f.check}: {f.detail}")
        lines.append("all checks passed" if self.ok else f"{len(self.failures)} failures")
        return "\n".join(lines) + "\n"


def run_verification(trials: int = 100, max_points: int = 50, seed: int = 1) -> VerificationReport:
    """Run all five oracle comparisons on random boards; zero failures expected."""
    if trials < 1:
        raise ValueError("need at least one trial")
    if max_points < 2:
        raise ValueError("need room for at least two points")
    report = VerificationReport(trials=trials, max_points=max_points, seed=seed)
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        n = rng.randint(2, max_points)
        dist = "uniform" if trial % 2 == 0 else "clusters"
        ps = generate(dist, n, seed=rng.randrange(2**31), bounds=_BOUNDS)

        def run(check: str, fn) -> None:
            detail = fn()
            if detail is None:
                report.passes[check] += 1
            else:
                report.failures.append(Failure(trial=trial, check=check, detail=detail))

        def check_decomposition() -> str | None:
            rep = oracle.check_wspd(ps, compute_wspd(ps, 2.0))
            if rep.valid:
                return None
            return (
                f"{len(rep.coverage_failures)} coverage and "
                f"{len(rep.separation_failures)} separation failures at s=2"
            )

        def check_closest() -> str | None:
            got = closest_pair(ps)
            want = oracle.brute_closest_pair(ps)
            if got == want:
                return None
            return f"closest pair {got} != oracle {want}"

        def check_k_closest() -> str | None:
            k = rng.randint(1, n * (n - 1) // 2)
            got = [p.d for p in k_closest_pairs(ps, k, s=2.0)]
            want = [p.d for p in oracle.brute_k_closest(ps, k)]
            if len(got) == len(want) and all(
                abs(a - b) <= 1e-12 for a, b in zip(got, want)
            ):
                return None
            return f"k={k} distance multiset mismatch"

        def check_ann() -> str | None:
            got = all_nearest_neighbors(ps, s=4.0)
            want = oracle.brute_ann(ps)
            if got == want:
                return None
            bad = sorted(p for p in want if got.get(p) != want[p])
            return f"nearest-neighbor mismatch at points {bad[:5]}"

        def check_amst() -> str | None:
            t = 2.0
            approx = approx_mst(ps, t).weight
            exact = oracle.brute_emst(ps).weight
            lo = exact * (1.0 - _REL_TOL)
            hi = t * exact * (1.0 + _REL_TOL)
            if lo <= approx <= hi:
                return None
            return f"approx weight {approx} outside [{exact}, {t * exact}]"

        run("wspd", check_decomposition)
        run("closest_pair", check_closest)
        run("k_closest", check_k_closest)
        run("ann", check_ann)
        run("amst", check_amst)
    return report
