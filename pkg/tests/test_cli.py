"""Experiment runner: validation, artifacts, exit codes, determinism."""

import filecmp
import json
import os

import numpy as np
import pytest

from unred.cli import main, validate_config

CONFIG_DIR = os.path.join(os.path.dirname(__file__), "..", "configs")


def write_config(tmp_path, cfg, name="run.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


def match_config(outdir, **overrides):
    cfg = {
        "command": "match",
        "geometry": {
            "boundary": "circle_to_circle", "n": 32, "m_x": 6, "m_t": 6,
            "r0": 1.0, "r1": 1.0,
        },
        "operator": {"A": 0.5, "backend": "spectral"},
        "force": {"kind": "zero"},
        "solver": {"tol_res": 1e-8, "max_iter": 30},
        "output": {"directory": str(outdir), "stride": 2},
    }
    for key, value in overrides.items():
        cfg[key] = value
    return cfg


# ---------------------------------------------------------------------------
# validation


def test_validate_accepts_shipped_configs(capsys):
    for name in sorted(os.listdir(CONFIG_DIR)):
        path = os.path.join(CONFIG_DIR, name)
        assert main(["validate", "--config", path]) == 0, name


def test_validate_reports_all_violations_at_once(tmp_path, capsys):
    cfg = {
        "command": "match",
        "geometry": {"n": 31, "m_x": 6, "m_t": 6},
        "operator": {"A": -1.0},
        "solver": {"tol_res": 0.0},
    }
    path = write_config(tmp_path, cfg)
    assert main(["validate", "--config", path]) == 2
    err = capsys.readouterr().err
    assert "operator.A must be >= 0" in err
    assert "geometry.n must be even" in err
    assert "solver.tol_res must be > 0" in err


def test_validate_catches_command_mismatch_and_unknown_keys():
    diags = validate_config(
        {"command": "flow", "solver": {"tau": 0.1}, "extra": {}}, "match"
    )
    text = "\n".join(diags)
    assert "declares command" in text
    assert "'tau'" in text
    assert "'extra'" in text


def test_malformed_json_is_a_config_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["validate", "--config", str(path)]) == 2
    assert main(["match", "--config", str(path)]) == 2


def test_missing_output_directory_is_a_config_error(tmp_path, capsys):
    cfg = match_config("ignored")
    del cfg["output"]["directory"]
    path = write_config(tmp_path, cfg)
    assert main(["match", "--config", path]) == 2


# ---------------------------------------------------------------------------
# runs and artifacts


def test_match_identity_circles(tmp_path, capsys):
    out = tmp_path / "out"
    path = write_config(tmp_path, match_config(out))
    assert main(["match", "--config", path]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["results"]["converged"] is True
    assert manifest["results"]["residual"] < 1e-12
    assert manifest["results"]["iterations"] == 0
    assert manifest["config"]["geometry"]["r0"] == 1.0
    assert set(manifest["versions"]) == {"python", "numpy", "scipy", "unred"}
    assert (out / "plotdata.csv").exists()
    # snapshots at stride 2 on the 7x7 node grid
    assert (out / "curve_x000_t000.csv").exists()
    assert (out / "curve_x006_t006.csv").exists()
    assert not (out / "curve_x001_t000.csv").exists()


def test_match_nonconvergence_still_writes_artifacts(tmp_path, capsys):
    out = tmp_path / "out"
    cfg = match_config(out, solver={"tol_res": 1e-8, "max_iter": 1})
    cfg["geometry"]["r1"] = 2.0
    path = write_config(tmp_path, cfg)
    assert main(["match", "--config", path]) == 3
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["results"]["converged"] is False
    assert manifest["results"]["residual"] > 0.0


def test_out_flag_overrides_config_directory(tmp_path, capsys):
    out = tmp_path / "elsewhere"
    path = write_config(tmp_path, match_config(tmp_path / "unused"))
    assert main(["match", "--config", path, "--out", str(out)]) == 0
    assert (out / "manifest.json").exists()
    assert not (tmp_path / "unused").exists()


def test_flow_run_artifacts(tmp_path, capsys):
    out = tmp_path / "out"
    cfg = {
        "command": "flow",
        "geometry": {"shape": "circle", "radius": 1.0, "n": 64,
                     "h0": 0.0, "T": 0.05, "dt": 0.001},
        "output": {"directory": str(out), "stride": 10},
    }
    path = write_config(tmp_path, cfg)
    assert main(["flow", "--config", path]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["results"]["stop_reason"] == "completed"
    assert manifest["results"]["max_abs_v"] == 0.0
    rows = (out / "plotdata.csv").read_text().strip().splitlines()
    assert rows[0] == "time,mean_radius,max_curvature,max_h,max_v"
    assert len(rows) == 52  # header + 51 states
    assert (out / "curve_000000.csv").exists()
    assert (out / "curve_000050.csv").exists()


def test_flow_singular_collapse_is_a_completed_run(tmp_path, capsys):
    out = tmp_path / "out"
    cfg = {
        "command": "flow",
        "geometry": {"shape": "circle", "radius": 0.2, "n": 16,
                     "h0": 0.0, "T": 0.5, "dt": 1e-5},
        "output": {"directory": str(out), "stride": 5000},
    }
    path = write_config(tmp_path, cfg)
    assert main(["flow", "--config", path]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["results"]["stop_reason"] == "singularity"
    assert manifest["results"]["final_time"] < 0.5


def test_hopf_run_cancellation(tmp_path, capsys):
    out = tmp_path / "out"
    path = os.path.join(CONFIG_DIR, "hopf_cancellation.json")
    assert main(["hopf", "--config", path, "--out", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert abs(manifest["results"]["phase"]) < 1e-6
    assert manifest["results"]["closure_error"] < 1e-6


def test_hopf_run_pure_connection(tmp_path, capsys):
    out = tmp_path / "out"
    path = os.path.join(CONFIG_DIR, "hopf_pure.json")
    assert main(["hopf", "--config", path, "--out", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert abs(manifest["results"]["phase"] - np.pi) < 1e-6


def test_sigma_run(tmp_path, capsys):
    out = tmp_path / "out"
    path = os.path.join(CONFIG_DIR, "sigma_bracket.json")
    assert main(["sigma", "--config", path, "--out", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["results"]["max_flatness_residual"] < 1e-12
    assert manifest["results"]["reconstructed"] is True
    assert (out / "reconstruction.csv").exists()


def test_sigma_nonflat_field_exits_numerical(tmp_path, capsys):
    out = tmp_path / "out"
    cfg = {
        "command": "sigma",
        "geometry": {"m_x": 8, "m_t": 8, "sigma_t": [1.0, 0.0, 0.0],
                     "sigma_x": [0.0, 1.0, 0.0], "reconstruct": True},
        "output": {"directory": str(out), "stride": 1},
    }
    path = write_config(tmp_path, cfg)
    assert main(["sigma", "--config", path]) == 4
    assert "numerical failure" in capsys.readouterr().err


def test_check_command_passes(capsys):
    assert main(["check"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.count("PASS") >= 9


def test_unknown_thread_limit_rejected(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("UNRED_THREADS", "lots")
    path = write_config(tmp_path, match_config(tmp_path / "out"))
    assert main(["match", "--config", path]) == 2


def test_thread_limit_applies(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("UNRED_THREADS", "1")
    path = write_config(tmp_path, match_config(tmp_path / "out"))
    assert main(["match", "--config", path]) == 0


# ---------------------------------------------------------------------------
# determinism


@pytest.mark.parametrize(
    "command,name",
    [
        ("match", "match_circles.json"),
        ("hopf", "hopf_cancellation.json"),
        ("sigma", "sigma_bracket.json"),
        ("flow", "flow_circle.json"),
    ],
)
def test_repeated_runs_are_byte_identical(tmp_path, capsys, command, name):
    path = os.path.join(CONFIG_DIR, name)
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert main([command, "--config", path, "--out", str(out_a)]) == 0
    assert main([command, "--config", path, "--out", str(out_b)]) == 0
    names = sorted(os.listdir(out_a))
    assert names == sorted(os.listdir(out_b))
    for entry in names:
        if entry == "manifest.json":
            # identical except the timings field
            a = json.loads((out_a / entry).read_text())
            b = json.loads((out_b / entry).read_text())
            a.pop("timings"), b.pop("timings")
            assert a == b
        else:
            assert filecmp.cmp(out_a / entry, out_b / entry, shallow=False), entry
