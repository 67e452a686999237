import csv
import json
import math
from pathlib import Path

import yaml
from click.testing import CliRunner

from src.cli import cli


def write_config(tmp_path: Path, **fields) -> str:
    config = {"output": str(tmp_path / "out"), **fields}
    path = tmp_path / "config.yml"
    path.write_text(yaml.safe_dump(config))
    return str(path)


def read_summary(tmp_path: Path, scenario: str) -> dict:
    return json.loads((tmp_path / "out" / scenario / "summary.json").read_text())


def test_solve_shock(tmp_path):
    config = write_config(
        tmp_path, gamma=1.0, mach=0.6, t_samples=[0.5], x_samples={"x_min": -1.0, "n_points": 5}
    )
    result = CliRunner().invoke(cli, ["solve", "--config", config, "--quiet"])
    assert result.exit_code == 0, result.output

    summary = read_summary(tmp_path, "advance_gamma1.0_mach0.6")
    assert summary["branch"] == "shock"
    assert math.isclose(summary["rho1"], 2.5, rel_tol=1e-14)
    assert math.isclose(summary["sigma"], -2.0 / 3.0, rel_tol=1e-14)
    # the file keeps enough digits to reproduce the shock speed
    assert abs(summary["sigma"] + 1.0 / (summary["rho1"] - 1.0)) < 1e-12

    with open(tmp_path / "out" / "advance_gamma1.0_mach0.6" / "profile_t0.5.csv") as f:
        rows = list(csv.DictReader(f))
    assert list(rows[0].keys()) == ["eta", "x", "t", "rho", "u", "p"]
    assert len(rows) == 5
    assert float(rows[0]["rho"]) == 1.0  # x = -1, ahead of the shock at -1/3
    assert math.isclose(float(rows[-1]["rho"]), 2.5, rel_tol=1e-14)


def test_solve_measure(tmp_path):
    config = write_config(tmp_path, gamma=1.0, mach=1.5, t_samples=[0.5, 2.0])
    result = CliRunner().invoke(cli, ["solve", "--config", config, "--quiet"])
    assert result.exit_code == 0, result.output

    summary = read_summary(tmp_path, "advance_gamma1.0_mach1.5")
    assert summary["branch"] == "measure"
    assert math.isclose(summary["w_p"], 0.5 - 1.0 / 4.5, rel_tol=1e-14)
    assert [atom["w_rho"] for atom in summary["atoms"]] == [0.5, 2.0]

    with open(tmp_path / "out" / "advance_gamma1.0_mach1.5" / "profile_t0.5.csv") as f:
        rows = list(csv.DictReader(f))
    # the wall point carries the atom and is left out
    assert all(float(row["x"]) < 0.0 for row in rows)


def test_solve_rarefaction_sweep(tmp_path):
    config = write_config(tmp_path, gamma=0.5, mach=[1.0, 3.0], direction="recede")
    result = CliRunner().invoke(cli, ["solve", "--config", config, "--quiet"])
    assert result.exit_code == 0, result.output

    summary = read_summary(tmp_path, "recede_gamma0.5_mach1.0")
    assert summary["branch"] == "rarefaction"
    assert summary["eta_head"] == -2.0
    assert summary["eta_tail"] == -1.75
    assert summary["second_family"]["reason"] == "exceeds_initial_density"

    summary = read_summary(tmp_path, "recede_gamma0.5_mach3.0")
    assert summary["second_family"]["reason"] == "negative_base"


def test_reruns_are_byte_identical(tmp_path):
    config = write_config(tmp_path, gamma=0.5, mach=0.8, t_samples=[1.0])
    scenario = tmp_path / "out" / "advance_gamma0.5_mach0.8"

    CliRunner().invoke(cli, ["solve", "--config", config, "--quiet"])
    first = [(scenario / name).read_bytes() for name in ["summary.json", "profile_t1.0.csv"]]
    CliRunner().invoke(cli, ["solve", "--config", config, "--quiet"])
    second = [(scenario / name).read_bytes() for name in ["summary.json", "profile_t1.0.csv"]]

    assert first == second


def test_verify_writes_weak_report(tmp_path):
    config = write_config(
        tmp_path,
        gamma=1.0,
        mach=0.6,
        t_samples=[1.0],
        weak={"n_test_functions": 4, "quadrature": 128},
    )
    result = CliRunner().invoke(cli, ["verify", "--config", config, "--quiet"])
    assert result.exit_code == 0, result.output

    report = json.loads(
        (tmp_path / "out" / "advance_gamma1.0_mach0.6" / "weak_report.json").read_text()
    )
    assert report["passed"]
    assert report["entropy"]["admissible_family"] == 1
    assert len(report["mass_residuals"]) == 4


def test_verify_failure_exits_one(tmp_path):
    # a tolerance no quadrature can meet
    config = write_config(
        tmp_path,
        gamma=0.5,
        mach=1.0,
        direction="recede",
        t_samples=[1.0],
        weak={"n_test_functions": 2, "quadrature": 16, "tolerance": 0.0},
    )
    result = CliRunner().invoke(cli, ["verify", "--config", config, "--quiet"])

    assert result.exit_code == 1
    assert "weak_report.json" in result.output


def test_fvm_writes_reports(tmp_path):
    config = write_config(
        tmp_path,
        gamma=0.5,
        mach=1.0,
        direction="recede",
        t_samples=[0.5],
        fvm={"n_cells": 64, "t_end": 0.25, "levels": 2},
    )
    result = CliRunner().invoke(cli, ["fvm", "--config", config, "--quiet"])
    assert result.exit_code in (0, 1), result.output

    scenario = tmp_path / "out" / "recede_gamma0.5_mach1.0"
    report = json.loads((scenario / "fvm_report.json").read_text())
    assert report["resolutions"] == [64, 128]
    assert "profiles" not in report

    with open(scenario / "fvm_profile_n128.csv") as f:
        rows = list(csv.DictReader(f))
    assert list(rows[0].keys()) == ["x", "rho", "u", "rho_exact", "u_exact"]
    assert len(rows) == 128


def test_invalid_config_exits_two(tmp_path):
    config = write_config(tmp_path, gamma=1.5, mach=0.6)
    result = CliRunner().invoke(cli, ["solve", "--config", config])

    assert result.exit_code == 2
    assert "gamma" in result.output
    assert "(0, 1]" in result.output

    result = CliRunner().invoke(cli, ["solve", "--config", str(tmp_path / "missing.yml")])
    assert result.exit_code == 2

    config = write_config(tmp_path, gamma=1.0, mach=0.6, direction="recede")
    result = CliRunner().invoke(cli, ["solve", "--config", config])
    assert result.exit_code == 2


def test_phase_diagram(tmp_path):
    out = tmp_path / "phase.csv"
    result = CliRunner().invoke(
        cli, ["phase-diagram", "--gamma", "0.5:1.0:2", "--mach", "0.999:1.0:2", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output

    with open(out) as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 4
    branches = {(float(r["gamma"]), float(r["mach"])): r["branch"] for r in rows}
    assert branches[(1.0, 0.999)] == "shock"
    assert branches[(1.0, 1.0)] == "measure"
    assert branches[(0.5, 0.999)] == "shock"

    out = tmp_path / "recede.csv"
    result = CliRunner().invoke(
        cli,
        [
            "phase-diagram",
            "--gamma", "0.1:0.9:3",
            "--mach", "0.5:5.0:4",
            "--direction", "recede",
            "--out", str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    with open(out) as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 12
    assert {r["branch"] for r in rows} == {"rarefaction"}


def test_phase_diagram_rejects_empty_grid(tmp_path):
    result = CliRunner().invoke(
        cli, ["phase-diagram", "--gamma", "0.5:1.0:0", "--mach", "0.5", "--out", str(tmp_path / "x.csv")]
    )
    assert result.exit_code == 2
