import json
from pathlib import Path

import pytest

from wellsep import cli
from wellsep.errors import GridOverflow
from wellsep.geometry import Rect
from wellsep.pointgen import generate
from wellsep.scene import Scene

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(*argv) -> int:
    return cli.main([str(a) for a in argv])


class TestGenerate:
    def test_uniform_is_deterministic(self):
        a = generate("uniform", 10, seed=7)
        b = generate("uniform", 10, seed=7)
        assert [(p.x, p.y) for p in a] == [(p.x, p.y) for p in b]

    def test_grid_lattice(self):
        ps = generate("grid", 9, bounds=Rect(0, 2, 0, 2))
        got = {(p.x, p.y) for p in ps}
        assert got == {(float(x), float(y)) for x in range(3) for y in range(3)}

    def test_grid_ignores_seed(self):
        a = generate("grid", 7, seed=1)
        b = generate("grid", 7, seed=99)
        assert [(p.x, p.y) for p in a] == [(p.x, p.y) for p in b]

    def test_clusters_are_distinct(self):
        ps = generate("clusters", 30, seed=1)
        assert len(ps) == 30  # PointSet construction enforces distinctness

    def test_grid_overflow(self):
        with pytest.raises(GridOverflow):
            generate("grid", 4, bounds=Rect(0, 0, 0, 5))

    def test_unknown_distribution(self):
        with pytest.raises(ValueError):
            generate("beehive", 4)


class TestPointFiles:
    def test_csv_with_header(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("x,y\n0,0\n1.5,2\n")
        ps = cli.load_points(str(f))
        assert [(p.x, p.y) for p in ps] == [(0.0, 0.0), (1.5, 2.0)]

    def test_csv_without_header(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("0,0\n1,2\n")
        assert len(cli.load_points(str(f))) == 2

    def test_json_points(self, tmp_path):
        f = tmp_path / "pts.json"
        f.write_text('{"points": [[0, 0], [2, 3]]}')
        ps = cli.load_points(str(f))
        assert (ps[1].x, ps[1].y) == (2.0, 3.0)

    def test_csv_round_trip(self, tmp_path):
        ps = generate("uniform", 8, seed=5)
        f = tmp_path / "pts.csv"
        f.write_text(cli.points_to_csv(ps))
        back = cli.load_points(str(f))
        assert [(p.x, p.y) for p in back] == [(p.x, p.y) for p in ps]

    def test_duplicate_points_rejected(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("1,1\n1,1\n")
        with pytest.raises(ValueError):
            cli.load_points(str(f))


class TestSceneRoundTrip:
    def test_parse_serialize_identity(self):
        from wellsep.pipeline import compute_scene

        ps = generate("uniform", 9, seed=3)
        scene = compute_scene(ps, "amst", t=2.0)
        assert Scene.from_json(scene.to_json()) == scene

    def test_unknown_schema_rejected(self):
        with pytest.raises(ValueError):
            Scene.from_obj({"schema": 999, "points": []})

    def test_dangling_index_rejected(self):
        obj = {
            "schema": 1,
            "points": [{"id": 0, "x": 0.0, "y": 0.0}],
            "spanner": {"t": 2.0, "edges": [[0, 5]]},
        }
        with pytest.raises(ValueError):
            Scene.from_obj(obj)


class TestSubcommands:
    def test_wspd_two_points_single_pair(self, tmp_path, capsys):
        f = tmp_path / "two.json"
        f.write_text('{"points": [[0, 0], [1, 0]]}')
        assert run_cli("wspd", "--s", 2, "--input", f) == 0
        scene = json.loads(capsys.readouterr().out)
        assert len(scene["wspd"]["pairs"]) == 1

    def test_spanner_t3_uses_s8(self, capsys):
        assert run_cli("spanner", "--t", 3, "--input", FIXTURES / "board_trace.json") == 0
        scene = json.loads(capsys.readouterr().out)
        assert scene["wspd"]["s"] == 8.0
        assert scene["spanner"]["t"] == 3.0

    def test_identical_invocations_are_byte_identical(self, tmp_path):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        src = FIXTURES / "board_uniform.json"
        assert run_cli("wspd", "--s", 2, "--input", src, "--output", out1) == 0
        assert run_cli("wspd", "--s", 2, "--input", src, "--output", out2) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_generate_writes_csv_when_asked(self, tmp_path):
        out = tmp_path / "pts.csv"
        assert run_cli("generate", "--n", 5, "--seed", 2, "--output", out) == 0
        assert out.read_text().startswith("x,y\n")
        assert len(cli.load_points(str(out))) == 5

    def test_ann_results_in_index_form(self, capsys):
        assert run_cli("ann", "--input", FIXTURES / "board_line.csv") == 0
        scene = json.loads(capsys.readouterr().out)
        assert scene["results"]["ann"] == [1, 0, 1]


class TestExitCodes:
    def test_missing_file_is_2(self, capsys):
        assert run_cli("wspd", "--input", "no/such/file.json") == 2

    def test_malformed_file_is_2(self, tmp_path, capsys):
        f = tmp_path / "bad.csv"
        f.write_text("not,a\nnumber,row\nstill,not\n")
        assert run_cli("wspd", "--input", f) == 2

    def test_invalid_k_is_2(self, capsys):
        assert run_cli("k-closest", "--k", 99, "--input", FIXTURES / "board_pair.json") == 2

    def test_invalid_t_is_2(self, capsys):
        assert run_cli("spanner", "--t", 1, "--input", FIXTURES / "board_pair.json") == 2

    def test_ann_small_s_is_2(self, capsys):
        assert run_cli("ann", "--s", 2, "--input", FIXTURES / "board_pair.json") == 2

    def test_internal_violation_is_3(self, monkeypatch, capsys):
        def boom(args):
            raise AssertionError("candidate pool smaller than k")

        monkeypatch.setattr(cli, "_dispatch", boom)
        assert cli.main(["split-tree", "--input", str(FIXTURES / "board_pair.json")]) == 3

    def test_bad_arguments_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["wspd", "--s", "not-a-number", "--input", "x.json"])
        assert exc.value.code == 2


class TestVerifySubcommand:
    def test_small_sweep_passes(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert run_cli("verify", "--trials", 4, "--n", 16, "--seed", 1, "--output", out) == 0
        report = json.loads(out.read_text())
        assert report["ok"] is True
        assert report["passes"] == {c: 4 for c in report["passes"]}
        text = capsys.readouterr().out
        assert "all checks passed" in text
