import json
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args, env_extra=None):
    env = dict(os.environ, PYTHONPATH=SRC)
    env.pop("HBALLS_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "hballs", *args],
        capture_output=True, text=True, env=env)


class TestLandauCommand:
    def test_reference_row(self):
        proc = run_cli("landau", "--n", "1", "--alpha", "1", "--m", "1")
        assert proc.returncode == 0
        assert "0.1071428571, 0.0535714286, 0.0267857143" in proc.stdout

    def test_range_is_strictly_decreasing(self):
        proc = run_cli("landau", "--n", "1..4", "--alpha", "1", "--m", "1")
        assert proc.returncode == 0
        rows = [line for line in proc.stdout.splitlines() if line and line[0].isdigit()]
        rhos = [float(line.split(",")[3]) for line in rows]
        assert len(rhos) == 4
        assert all(a > b for a, b in zip(rhos, rhos[1:]))

    def test_alpha_zero_is_config_error(self):
        proc = run_cli("landau", "--alpha", "0")
        assert proc.returncode == 2

    def test_csv_export(self, tmp_path):
        out = tmp_path / "landau.csv"
        proc = run_cli("landau", "--n", "1,2", "--alpha", "1", "--m", "1",
                       "--out", str(out))
        assert proc.returncode == 0
        text = out.read_bytes().decode()
        assert "\r" not in text
        lines = text.strip().split("\n")
        assert lines[0] == "n,alpha,M,rho,half_rho,r_lower"
        assert len(lines) == 3


class TestExtendCommand:
    def test_constant_boundary(self, tmp_path):
        out = tmp_path / "f.csv"
        proc = run_cli("extend", "--n", "1", "--boundary", "const:1",
                       "--nodes", "1024", "--points", "grid:0.1:0.7:8",
                       "--out", str(out))
        assert proc.returncode == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "re(z_1),im(z_1),re(f),im(f)"
        values = np.array([[float(tok) for tok in line.split(",")] for line in lines[1:]])
        np.testing.assert_allclose(values[:, 2], 1.0, atol=1e-10)
        np.testing.assert_allclose(values[:, 3], 0.0, atol=1e-10)

    def test_poisson_identity_point(self):
        proc = run_cli("extend", "--n", "1", "--boundary", "re",
                       "--nodes", "4096", "--points", "0.5+0i")
        assert proc.returncode == 0
        row = proc.stdout.strip().split("\n")[1].split(",")
        assert float(row[2]) == pytest.approx(0.5, abs=1e-8)

    def test_deterministic_output(self, tmp_path):
        # --nodes sizes whichever rule the dimension selects (MC here)
        args = ("extend", "--n", "2", "--boundary", "const:1", "--nodes", "5000",
                "--seed", "42", "--points", "0.1+0i,0.2+0i;0.3+0.1i,0+0i")
        a = run_cli(*args, "--out", str(tmp_path / "a.csv"))
        b = run_cli(*args, "--out", str(tmp_path / "b.csv"))
        assert a.returncode == 0 and b.returncode == 0
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
        c = run_cli("extend", "--n", "2", "--boundary", "const:1", "--mc-nodes", "5000",
                    "--seed", "42", "--points", "0.1+0i,0.2+0i;0.3+0.1i,0+0i",
                    "--out", str(tmp_path / "c.csv"))
        assert c.returncode == 0
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "c.csv").read_bytes()

    def test_bad_flags_exit_2(self):
        assert run_cli("extend", "--n", "1", "--boundary", "nope",
                       "--points", "0+0i").returncode == 2
        assert run_cli("extend", "--n", "1", "--boundary", "re",
                       "--points", "0.5+0i,0.5+0i").returncode == 2
        assert run_cli("extend", "--n", "1", "--points", "0+0i").returncode == 2

    def test_numerical_failure_exit_3(self):
        # a point beyond the guard radius aborts with the offending input
        proc = run_cli("extend", "--n", "1", "--boundary", "re",
                       "--rmax", "0.8", "--points", "0.95+0i")
        assert proc.returncode == 3
        assert "0.95" in proc.stderr


class TestVerifyCommand:
    def test_lemmab_exit_zero(self):
        proc = run_cli("verify", "--suite", "lemmaB", "--trials", "2000", "--seed", "7")
        assert proc.returncode == 0

    def test_report_schema(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("verify", "--suite", "landau", "--seed", "1",
                       "--out", str(out))
        assert proc.returncode == 0
        text = out.read_text()
        doc = json.loads(text)
        assert list(doc)[0] == "schema"
        assert doc["schema"] == "hballs.verify-report/1"
        assert set(doc["summary"]) == {"total", "passed", "failed", "wall_ms"}
        assert doc["summary"]["wall_ms"] is None
        assert doc["summary"]["failed"] == 0
        assert doc["config"]["seed"] == 1
        first = doc["checks"][0]
        for key in ("check_id", "lhs", "rhs", "margin", "pass", "tolerance"):
            assert key in first
        constants = next(c for c in doc["checks"] if "constants" in c["check_id"])
        assert constants["inputs"]["rho"] == pytest.approx(3.0 / 28.0, rel=1e-15)

    def test_timings_flag_records_wall_time(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("verify", "--suite", "landau", "--seed", "1",
                       "--timings", "--out", str(out))
        assert proc.returncode == 0
        doc = json.loads(out.read_text())
        assert isinstance(doc["summary"]["wall_ms"], int)

    def test_unknown_suite_exit_2(self):
        assert run_cli("verify", "--suite", "bogus").returncode == 2

    def test_invalid_alpha_exit_2(self):
        assert run_cli("verify", "--suite", "landau", "--alpha", "0").returncode == 2

    def test_reproducible_bytes(self, tmp_path):
        args = ("verify", "--suite", "lemma22", "--seed", "3", "--nodes", "512")
        a = run_cli(*args, "--out", str(tmp_path / "a.json"))
        b = run_cli(*args, "--out", str(tmp_path / "b.json"))
        assert a.returncode == 0 and b.returncode == 0
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


class TestConfigHandling:
    def test_env_seed_overrides_default_only(self, tmp_path):
        out_env = tmp_path / "env.json"
        proc = run_cli("verify", "--suite", "landau", "--out", str(out_env),
                       env_extra={"HBALLS_SEED": "9"})
        assert proc.returncode == 0
        assert json.loads(out_env.read_text())["config"]["seed"] == 9

        out_flag = tmp_path / "flag.json"
        proc = run_cli("verify", "--suite", "landau", "--seed", "2",
                       "--out", str(out_flag), env_extra={"HBALLS_SEED": "9"})
        assert json.loads(out_flag.read_text())["config"]["seed"] == 2

    def test_config_file_between_flags_and_defaults(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("seed=5\nnodes=512\n# comment line\n")
        out = tmp_path / "report.json"
        proc = run_cli("verify", "--suite", "landau", "--config", str(cfg),
                       "--out", str(out))
        assert proc.returncode == 0
        doc = json.loads(out.read_text())
        assert doc["config"]["seed"] == 5
        assert doc["config"]["nodes"] == 512

        proc = run_cli("verify", "--suite", "landau", "--config", str(cfg),
                       "--seed", "8", "--out", str(out))
        assert json.loads(out.read_text())["config"]["seed"] == 8

    def test_malformed_config_exit_2(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("this is not key value\n")
        assert run_cli("verify", "--suite", "landau",
                       "--config", str(cfg)).returncode == 2
