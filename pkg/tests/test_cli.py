"""End-to-end CLI checks: exit codes, formats, determinism."""

import json
import math

import pytest

from shapelab import cli, suites
from shapelab.suites import CaseResult

J0_SQ = 2.4048255576957728 ** 2
PI2_12 = math.pi ** 2 / 12.0


def run_cli(argv):
    try:
        return cli.main(argv)
    except SystemExit as exc:
        return exc.code


def test_no_command_is_usage_error():
    assert run_cli([]) == 2


def test_bad_log_level(monkeypatch, capsys):
    monkeypatch.setenv("SHAPELAB_LOG", "chatty")
    assert run_cli(["eval", "--domain", "ball:1", "--q", "1"]) == 2
    assert "SHAPELAB_LOG" in capsys.readouterr().err


def test_grid_range_enforced():
    assert run_cli(["eval", "--domain", "ball:1", "--q", "1", "--grid", "16"]) == 2
    assert run_cli(["eval", "--domain", "ball:1", "--q", "1", "--grid", "4096"]) == 2


class TestEval:
    def test_ball_json(self, capsys):
        assert run_cli(["eval", "--domain", "ball:1", "--q", "1", "--dim", "2"]) == 0
        rec = json.loads(capsys.readouterr().out)
        assert rec["dim"] == 2
        assert rec["lambda"] == pytest.approx(J0_SQ, rel=1e-12)
        assert rec["torsion"] == pytest.approx(math.pi / 8.0, rel=1e-12)
        assert rec["provenance"] == "closed_form"
        assert rec["f_q"] == pytest.approx(J0_SQ / 8.0, rel=1e-12)
        assert rec["x"] == pytest.approx(1.0, abs=1e-12)
        assert rec["y"] == pytest.approx(1.0, abs=1e-12)

    def test_rect_csv(self, capsys):
        assert run_cli(["eval", "--domain", "rect:1x2", "--q", "1",
                        "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "# schema=1"
        cols = lines[1].split(",")
        row = dict(zip(cols, lines[2].split(",")))
        assert float(row["lambda"]) == pytest.approx(
            math.pi ** 2 * (1.0 + 0.25), rel=1e-12)
        assert row["provenance"] == "series"

    def test_domain_as_json_string(self, capsys):
        dom = json.dumps({"kind": "ball", "dim": 3, "radius": 2.0})
        assert run_cli(["eval", "--domain", dom, "--q", "1"]) == 0
        rec = json.loads(capsys.readouterr().out)
        assert rec["dim"] == 3
        assert rec["lambda"] == pytest.approx(math.pi ** 2 / 4.0, rel=1e-12)

    def test_domain_as_file(self, tmp_path, capsys):
        path = tmp_path / "dom.json"
        path.write_text(json.dumps({"kind": "intervals", "lengths": [1.0, 0.5]}))
        assert run_cli(["eval", "--domain", str(path), "--q", "1"]) == 0
        rec = json.loads(capsys.readouterr().out)
        assert rec["dim"] == 1
        assert rec["lambda"] == pytest.approx(math.pi ** 2, rel=1e-12)

    def test_unknown_domain(self):
        assert run_cli(["eval", "--domain", "noodle:3", "--q", "1"]) == 2

    def test_svg_rejected(self):
        assert run_cli(["eval", "--domain", "ball:1", "--q", "1",
                        "--format", "svg"]) == 2

    def test_missing_args(self):
        assert run_cli(["eval", "--q", "1"]) == 2
        assert run_cli(["eval", "--domain", "ball:1"]) == 2


class TestDiagram:
    def test_d1_outputs(self, tmp_path, capsys):
        out = tmp_path / "d1"
        assert run_cli(["diagram", "--dim", "1", "--points", "40",
                        "--out", str(out)]) == 0
        printed = capsys.readouterr().out.splitlines()
        assert printed == [str(out) + ".csv", str(out) + ".svg"]
        csv_text = (tmp_path / "d1.csv").read_text()
        assert csv_text.startswith("# schema=1")
        assert "<svg" in (tmp_path / "d1.svg").read_text()

    def test_deterministic(self, tmp_path, capsys):
        texts = []
        for tag in ("a", "b"):
            out = tmp_path / tag
            assert run_cli(["diagram", "--dim", "2", "--points", "60",
                            "--seed", "7", "--out", str(out)]) == 0
            texts.append(((tmp_path / f"{tag}.csv").read_bytes(),
                          (tmp_path / f"{tag}.svg").read_bytes()))
        capsys.readouterr()
        assert texts[0] == texts[1]

    def test_overlay_needs_dim2(self, tmp_path):
        assert run_cli(["diagram", "--dim", "3", "--overlay-grid-domains",
                        "--out", str(tmp_path / "x")]) == 2

    def test_overlay_grid_domains(self, tmp_path, capsys):
        out = tmp_path / "ov"
        assert run_cli(["diagram", "--dim", "2", "--points", "0", "--grid", "64",
                        "--overlay-grid-domains", "--out", str(out)]) == 0
        capsys.readouterr()
        csv_text = (tmp_path / "ov.csv").read_text()
        overlay_rows = [l for l in csv_text.splitlines()
                        if l.endswith(",grid domains")]
        assert len(overlay_rows) >= 3
        for line in overlay_rows:
            cells = line.split(",")
            x, y = float(cells[0]), float(cells[1])
            assert 0.0 < x <= 1.001
            assert x ** 2 * 0.98 <= y <= 1.001

    def test_bad_dim(self):
        assert run_cli(["diagram", "--dim", "4"]) == 2


class TestVerify:
    def test_cylinder_bounds_passes(self, capsys):
        assert run_cli(["verify", "--suite", "cylinder-bounds"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out
        assert "FAIL" not in out
        assert "7/7 cases passed" in out

    def test_unknown_suite(self):
        assert run_cli(["verify", "--suite", "nonsense"]) == 2

    def test_missing_suite_arg(self):
        assert run_cli(["verify"]) == 2

    def test_failing_suite_exits_3(self, monkeypatch, capsys):
        def stub(*, grid_n, seed, samples, richardson):
            return [CaseResult("stub", "forced-failure", False, "for testing")]

        monkeypatch.setitem(suites.SUITES, "stub", stub)
        assert run_cli(["verify", "--suite", "stub"]) == 3
        out = capsys.readouterr().out
        assert "FAIL" in out
        assert "0/1 cases passed" in out


class TestThin:
    def test_interval_cone_json(self, capsys):
        assert run_cli(["thin", "--base", "interval:1", "--grid", "511",
                        "--eps", "0.2,0.1"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["dim"] == 2
        assert payload["ratio_h3_h1"] == pytest.approx(0.5, abs=1e-3)
        assert payload["sharp_low"] == pytest.approx(0.5, rel=1e-12)
        assert [r["eps"] for r in payload["rows"]] == [0.2, 0.1]
        for row in payload["rows"]:
            assert row["lambda_approx"] == pytest.approx(
                math.pi ** 2 / row["eps"] ** 2, rel=1e-6)
            assert row["f1_approx"] == pytest.approx(
                PI2_12 * payload["ratio_h3_h1"], rel=1e-12)

    def test_profile_csv_round_trip(self, tmp_path, capsys):
        from shapelab.thin_convex import (ConvexBase, random_concave_profile,
                                          write_profile_csv)
        profile = random_concave_profile(ConvexBase.interval(1.0), seed=2,
                                         grid_n=65)
        path = tmp_path / "prof.csv"
        write_profile_csv(profile, str(path))
        assert run_cli(["thin", "--profile", str(path), "--eps", "0.1"]) == 0
        payload = json.loads(capsys.readouterr().out)
        from shapelab.thin_convex import ratio_h3_h1
        assert payload["ratio_h3_h1"] == pytest.approx(
            ratio_h3_h1(profile), rel=1e-12)

    def test_needs_base_or_profile(self):
        assert run_cli(["thin"]) == 2

    def test_svg_rejected(self):
        assert run_cli(["thin", "--base", "interval:1", "--format", "svg"]) == 2


class TestRelaxed:
    def test_target(self, capsys):
        assert run_cli(["relaxed", "--target", "0.9"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["product_bound"] > 0.9
        assert payload["dim"] == 2

    def test_table_csv(self, capsys):
        assert run_cli(["relaxed", "--format", "csv", "--dim", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[1] == "c,delta,product_bound"
        assert len(lines) == 22
        for line in lines[2:]:
            assert 0.0 < float(line.split(",")[2]) < 1.0

    def test_dim_1_rejected(self):
        assert run_cli(["relaxed", "--dim", "1"]) == 2


class TestSweep:
    def test_jobs_agree(self, tmp_path):
        texts = []
        for jobs, tag in ((1, "a"), (2, "b")):
            out = tmp_path / f"{tag}.csv"
            assert run_cli(["sweep", "--count", "50", "--seed", "11",
                            "--jobs", str(jobs), "--format", "csv",
                            "--out", str(out)]) == 0
            texts.append(out.read_bytes())
        assert texts[0] == texts[1]

    def test_seed_changes_output(self, capsys):
        outs = []
        for seed in ("1", "1", "2"):
            assert run_cli(["sweep", "--count", "20", "--seed", seed,
                            "--format", "csv"]) == 0
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1]
        assert outs[0] != outs[2]

    def test_json_rows(self, capsys):
        assert run_cli(["sweep", "--count", "10", "--dim", "1",
                        "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload["rows"]) == 10
        for row in payload["rows"]:
            assert row["dim"] == 1
            assert 0.0 < row["x"] <= 1.0 + 1e-12
            assert row["y"] >= row["x"] ** 1.5 - 1e-12
