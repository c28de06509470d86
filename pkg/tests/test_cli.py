"""The qproj command line: outputs, formats, and exit code contract."""

import json
import subprocess
import sys

import pytest

from qproj import cli, suite
from qproj.reports import VerifyReport

REPORT_KEYS = {"check", "params", "domain_size", "image_size", "pass",
               "counterexample"}


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCalculators:
    def test_normalize_table(self, capsys):
        code, out, _ = run_cli(capsys, "normalize",
                               "P[3,1] (+) P[1,2] (+) P[1,1]", "--n", "3")
        assert code == 0 and out.strip() == "P[1,3]"

    def test_normalize_json(self, capsys):
        code, out, _ = run_cli(capsys, "normalize", "P[1,2](+)P[0,3]",
                               "--n", "2", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"n": 2, "j": 0, "k": 3}

    def test_rho_formats(self, capsys):
        code, out, _ = run_cli(capsys, "rho", "P[2,3]", "--n", "3")
        assert code == 0 and out.strip() == "[0, 0, 3, inf]"
        code, out, _ = run_cli(capsys, "rho", "P[2,3]", "--n", "3",
                               "--format", "json")
        assert json.loads(out) == [0, 0, 3, "inf"]

    def test_boxplus(self, capsys):
        code, out, _ = run_cli(capsys, "boxplus", "P[1,2]", "P[2,5]", "--n", "3")
        assert code == 0 and out.strip() == "P[1,2]"
        code, out, _ = run_cli(capsys, "boxplus", "P[1,2] (+) P[0,1]", "P[1,4]",
                               "--n", "3")
        assert out.strip() == "P[0,1]"

    def test_k0_modes(self, capsys):
        code, out, _ = run_cli(capsys, "k0", "--n", "2", "--bundle", "3",
                               "--format", "json")
        assert code == 0
        assert json.loads(out) == {"n": 2, "coords": [1, 3, 6]}
        code, out, _ = run_cli(capsys, "k0", "--n", "3", "--generator", "1")
        assert out.strip() == "[0, 1, 0, 0]"
        code, out, _ = run_cli(capsys, "k0", "--n", "3", "--iota", "5")
        assert out.strip() == "[0, 0, 0, 5]"
        code, out, _ = run_cli(capsys, "k0", "--n", "3", "--nu", "4,-2,7,1")
        assert out.strip() == "[4, -2, 7]"
        code, out, _ = run_cli(capsys, "k0", "P[0,2] (+) P[1,5]", "--n", "2")
        assert out.strip() == "2"

    def test_k0_exactness(self, capsys):
        code, out, _ = run_cli(capsys, "k0", "--n", "3", "--exactness")
        assert code == 0 and out.startswith("PASS k0-exactness")
        code, out, _ = run_cli(capsys, "k0", "--n", "3", "--exactness",
                               "--format", "json")
        blob = json.loads(out)
        assert set(blob) == REPORT_KEYS and blob["pass"]

    def test_linebundle(self, capsys):
        code, out, _ = run_cli(capsys, "linebundle", "--n", "2", "--k", "-3")
        assert code == 0 and "corner projection at depth 3" in out
        code, out, _ = run_cli(capsys, "linebundle", "--n", "2", "--k", "3",
                               "--format", "json")
        assert json.loads(out) == {"n": 2, "k": 3, "kind": "multiset",
                                   "mult": [1, 3, 6]}
        code, out, _ = run_cli(capsys, "linebundle", "--n", "2", "--k", "2")
        assert "6 classes" in out and "3 x P[2,1]" in out


class TestValidationExitCode:
    CASES = [
        ("normalize", "garbage", "--n", "2"),
        ("normalize", "P[5,1]", "--n", "2"),
        ("normalize", "P[1,2]"),                      # missing --n
        ("no-such-command",),
        ("k0", "--n", "2"),                           # no mode picked
        ("k0", "P[0,1]", "--n", "2", "--bundle", "1"),
        ("k0", "--n", "2", "--nu", "1,x"),
        ("linebundle", "--n", "0", "--k", "1"),
        ("groupoid-verify", "--n", "2", "--map", "partition"),
        ("groupoid-verify", "--n", "2", "--map", "theta-neg", "--k", "1"),
        ("groupoid-verify", "--n", "2", "--window", "0"),
        ("rho", "P[1,2]", "--n", "2", "--format", "xml"),
    ]

    @pytest.mark.parametrize("argv", CASES)
    def test_exit_one(self, capsys, argv):
        code, _, err = run_cli(capsys, *argv)
        assert code == 1
        assert err  # some diagnostic is printed


class TestVerifiers:
    def test_single_map_table(self, capsys):
        code, out, _ = run_cli(capsys, "groupoid-verify", "--n", "1",
                               "--map", "t", "--window", "4")
        assert code == 0
        assert out.strip().startswith("PASS bijection map=t")

    def test_single_partition_json(self, capsys):
        code, out, _ = run_cli(capsys, "groupoid-verify", "--n", "1",
                               "--map", "partition", "--k", "1", "--j", "0",
                               "--window", "4", "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert set(blob) == REPORT_KEYS
        assert blob["check"] == "partition" and blob["pass"]

    def test_all_maps_small(self, capsys):
        code, out, _ = run_cli(capsys, "groupoid-verify", "--n", "1",
                               "--window", "2", "--format", "json")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) > 10
        assert all(set(r) == REPORT_KEYS and r["pass"] for r in records)

    def test_oracle_verify(self, capsys):
        code, out, _ = run_cli(capsys, "oracle-verify", "--n-max", "2",
                               "--k-max", "4", "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert blob["check"] == "oracle-agreement" and blob["pass"]

    def test_verify_all_ndjson_and_exit(self, capsys, monkeypatch):
        fake = [
            VerifyReport("alpha", {"n": 1}, True, 3, 3),
            VerifyReport("beta", {"n": 2}, False,
                         counterexample={"kind": "gap"}),
        ]
        monkeypatch.setattr(suite, "run_all", lambda seed, jobs: fake)
        code, out, err = run_cli(capsys, "verify-all", "--format", "json")
        assert code == 2
        records = [json.loads(line) for line in out.splitlines()]
        assert [r["check"] for r in records] == ["alpha", "beta"]
        assert all(set(r) == REPORT_KEYS for r in records)
        assert "1/2 checks passed" in err

    def test_verify_all_green_exit(self, capsys, monkeypatch):
        fake = [VerifyReport("alpha", {}, True)]
        monkeypatch.setattr(suite, "run_all", lambda seed, jobs: fake)
        code, out, err = run_cli(capsys, "verify-all")
        assert code == 0
        assert out.strip().startswith("PASS alpha")
        assert "1/1 checks passed" in err

    def test_verify_all_passes_seed_and_jobs(self, capsys, monkeypatch):
        seen = {}

        def spy(seed, jobs):
            seen["seed"], seen["jobs"] = seed, jobs
            return [VerifyReport("alpha", {}, True)]

        monkeypatch.setattr(suite, "run_all", spy)
        run_cli(capsys, "verify-all", "--seed", "99", "--jobs", "2")
        assert seen == {"seed": 99, "jobs": 2}
        run_cli(capsys, "verify-all")
        assert seen["seed"] == suite.DEFAULT_SEED and seen["jobs"] is None


class TestConsoleScript:
    def test_installed_entry_point(self):
        proc = subprocess.run(
            ["qproj", "rho", "P[1,2]", "--n", "2", "--format", "json"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == [0, 2, "inf"]

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qproj.cli", "normalize", "P[0,1]", "--n", "1"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0 and proc.stdout.strip() == "P[0,1]"
