from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from sphereroute.cli import main
from sphereroute.graph import write_dimacs
from sphereroute.synth import grid_graph, path_graph


@pytest.fixture
def grid_file(tmp_path):
    g = grid_graph(8, 8, weight_range=(1, 10), seed=1)
    path = tmp_path / "grid.gr"
    with open(path, "w") as f:
        write_dimacs(g, f)
    return str(path)


@pytest.fixture
def path_file(tmp_path):
    g = path_graph(10)
    path = tmp_path / "path.gr"
    with open(path, "w") as f:
        write_dimacs(g, f)
    return str(path)


def run_main(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


class TestExitCodes:
    def test_no_arguments_usage(self, capsys):
        code, _, err = run_main([], capsys)
        assert code == 1
        assert "usage" in err.lower()

    def test_unknown_flag(self, capsys):
        code, _, _ = run_main(["route", "--nope", "1"], capsys)
        assert code == 1

    def test_missing_graph_file(self, capsys):
        code, _, err = run_main(
            ["route", "--graph", "/nonexistent.gr", "--s", "1", "--t", "2"], capsys)
        assert code == 2
        assert "error" in err

    def test_missing_config_file(self, capsys):
        code, _, _ = run_main(
            ["bench", "--config", "/missing.toml", "--graph", "x.gr"], capsys)
        assert code == 2

    def test_terminal_out_of_range(self, grid_file, capsys):
        code, _, _ = run_main(
            ["route", "--graph", grid_file, "--s", "1", "--t", "9999"], capsys)
        assert code == 2

    def test_equal_terminals_usage_error(self, grid_file, capsys):
        code, _, _ = run_main(
            ["route", "--graph", grid_file, "--s", "3", "--t", "3"], capsys)
        assert code == 1

    def test_subprocess_entry_point(self, path_file):
        proc = subprocess.run(
            [sys.executable, "-m", "sphereroute", "route", "--graph", path_file,
             "--s", "1", "--t", "10", "--json"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["cost"] == 9.0


class TestRouteCommand:
    def test_human_output(self, grid_file, capsys):
        code, out, _ = run_main(
            ["route", "--graph", grid_file, "--s", "1", "--t", "64", "--seed", "7"],
            capsys)
        assert code == 0
        assert "cost=" in out and "total_s=" in out

    def test_json_output_and_determinism(self, grid_file, capsys):
        args = ["route", "--graph", grid_file, "--s", "1", "--t", "64",
                "--seed", "7", "--json"]
        code, out1, _ = run_main(args, capsys)
        assert code == 0
        code, out2, _ = run_main(args, capsys)
        a, b = json.loads(out1), json.loads(out2)
        assert a["cost"] == b["cost"]
        assert a["config_hash"] == b["config_hash"]

    def test_emit_path_file(self, path_file, tmp_path, capsys):
        out_file = tmp_path / "route.txt"
        code, _, _ = run_main(
            ["route", "--graph", path_file, "--s", "1", "--t", "10",
             "--emit-path", str(out_file), "--quiet"], capsys)
        assert code == 0
        lines = out_file.read_text().splitlines()
        meta = [l for l in lines if l.startswith("#")]
        nodes = [int(l) for l in lines if not l.startswith("#")]
        assert any("config_hash=" in l for l in meta)
        assert any("graph_hash=" in l for l in meta)
        assert nodes == list(range(1, 11))  # 1-based external ids

    def test_flag_beats_env_beats_default(self, grid_file, capsys, monkeypatch):
        monkeypatch.setenv("SPHEREROUTE_SEED", "5")
        code, out, _ = run_main(
            ["route", "--graph", grid_file, "--s", "1", "--t", "64", "--json"], capsys)
        assert json.loads(out)["config"]["seed"] == 5
        code, out, _ = run_main(
            ["route", "--graph", grid_file, "--s", "1", "--t", "64", "--json",
             "--seed", "9"], capsys)
        assert json.loads(out)["config"]["seed"] == 9

    def test_config_file_used(self, grid_file, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("r_max=7\nseed=3\n")
        code, out, _ = run_main(
            ["route", "--graph", grid_file, "--s", "1", "--t", "64",
             "--config", str(cfg), "--json"], capsys)
        assert code == 0
        got = json.loads(out)["config"]
        assert got["r_max"] == 7 and got["seed"] == 3


class TestPartitionCommand:
    def test_json_lines_schema(self, path_file, capsys):
        code, out, _ = run_main(
            ["partition", "--graph", path_file, "--s", "1", "--t", "10",
             "--r-max", "2"], capsys)
        assert code == 0
        lines = [json.loads(l) for l in out.splitlines()]
        assert "meta" in lines[0]
        tasks = lines[1:]
        assert len(tasks) == lines[0]["meta"]["tasks"]
        for i, task in enumerate(tasks):
            assert task["index"] == i
            for key in ("entry", "exit", "nodes", "edges", "radius", "depth", "forced"):
                assert key in task
        assert tasks[0]["entry"] == 1
        assert tasks[-1]["exit"] == 10
        for a, b in zip(tasks[:-1], tasks[1:]):
            assert a["exit"] == b["entry"]


class TestBaselineCommand:
    @pytest.mark.parametrize("method", ["dijkstra", "corridor", "louvain"])
    def test_runs(self, grid_file, capsys, method):
        code, out, _ = run_main(
            ["baseline", "--graph", grid_file, "--method", method,
             "--s", "1", "--t", "64", "--k", "4", "--json", "--oracle"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["cost"] > 0
        if method != "dijkstra":
            assert payload["gap"] >= 0


class TestBenchAndProfiles:
    def test_bench_writes_csvs_and_profiles_recompute(self, grid_file, tmp_path, capsys):
        out_dir = tmp_path / "out"
        code, _, _ = run_main(
            ["bench", "--graph", grid_file, "--problem-seeds", "1..3",
             "--inner-seeds", "1,2", "--k", "4", "--output-dir", str(out_dir),
             "--quiet"], capsys)
        assert code == 0
        records = out_dir / "records.csv"
        summary = out_dir / "summary.csv"
        profiles = out_dir / "profiles.csv"
        for f in (records, summary, profiles):
            assert f.exists()
            head = f.read_text().splitlines()[0]
            assert head.startswith("# sphereroute")
        assert "schema=1,p,method,avg_time,avg_gap,median_gap,std_gap" in \
            summary.read_text()
        out2 = tmp_path / "profiles2.csv"
        code, _, _ = run_main(
            ["profiles", "--records", str(records), "--out", str(out2), "--quiet"],
            capsys)
        assert code == 0

        def data_rows(path):
            return [l for l in path.read_text().splitlines()
                    if l and not l.startswith("#")]

        assert data_rows(profiles) == data_rows(out2)
