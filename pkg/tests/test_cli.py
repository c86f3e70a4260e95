import json
import math
import subprocess
import sys

import pytest

from grassfp.cli import main


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("GRASSFP_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


class TestRho:
    @pytest.mark.parametrize("n, expected", [("4", "1.41421356237310"), ("3", "1.00000000000000")])
    def test_golden(self, capsys, n, expected):
        code, out, _ = run(capsys, "rho", "--k", "2", "--n", n, "--lambda", "1,0")
        assert code == 0 and f"rho: {expected}" in out

    def test_box_violation(self, capsys):
        code, out, err = run(capsys, "rho", "--k", "2", "--n", "4", "--lambda", "3,0")
        assert code == 2 and out == "" and "error" in err

    def test_exact_check(self, capsys, cache_dir):
        code, rec = run_json(capsys, "rho", "--k", "2", "--n", "4", "--lambda", "1", "--exact-check")
        assert code == 0 and rec["schema_version"] == 1 and rec["command"] == "rho"
        assert float(rec["results"]["gap"]) <= 1e-8
        assert rec["provenance"]["spectral_method"] == "power-iteration"
        assert (cache_dir / "gr_2_4_quantum.txt").exists()

    def test_no_cache(self, capsys, cache_dir):
        code, _, _ = run(capsys, "rho", "--k", "2", "--n", "5", "--lambda", "1", "--exact-check", "--no-cache")
        assert code == 0 and not cache_dir.exists()

    def test_missing_flag(self, capsys):
        code, _, err = run(capsys, "rho", "--k", "2", "--lambda", "1")
        assert code == 2 and "--n" in err

    def test_bad_partition_syntax(self, capsys):
        code, _, _ = run(capsys, "rho", "--k", "2", "--n", "4", "--lambda", "1,x")
        assert code == 2


class TestSmallCommands:
    def test_dim(self, capsys):
        code, rec = run_json(capsys, "dim", "--k", "4", "--lambda", "6,4,2,1")
        assert code == 0 and rec["results"]["dim"] == 360

    def test_lr(self, capsys):
        code, rec = run_json(capsys, "lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1")
        assert rec["results"]["coefficient"] == 2

    def test_qprod_box_squared(self, capsys):
        code, rec = run_json(capsys, "qprod", "--k", "2", "--n", "4", "--lambda", "1,0", "--mu", "1,0")
        assert code == 0
        assert rec["results"]["table"]["rows"] == [["2", 0, 1], ["1,1", 0, 1]]

    def test_qprod_identity(self, capsys):
        code, rec = run_json(capsys, "qprod", "--k", "3", "--n", "6", "--lambda", "0", "--mu", "2,1")
        assert rec["results"]["table"]["rows"] == [["2,1", 0, 1]]

    def test_qprod_top_class(self, capsys):
        code, rec = run_json(capsys, "qprod", "--k", "2", "--n", "4", "--lambda", "2,2", "--mu", "2,2")
        assert rec["results"]["table"]["rows"] == [["0", 2, 1]]

    def test_fusion(self, capsys):
        code, rec = run_json(capsys, "fusion", "--k", "2", "--r", "2", "--lambda", "2,2", "--mu", "1", "--nu", "1")
        assert code == 0 and rec["results"]["coefficient"] == 1


class TestFPdim:
    def test_quantum_gr24(self, capsys):
        code, rec = run_json(capsys, "fpdim", "--k", "2", "--n", "4", "--check-hom")
        assert code == 0 and rec["results"]["homomorphism_violations"] == 0
        rows = rec["results"]["table"]["rows"]
        assert len(rows) == 6 and rows[0][1] == "1.00000000000000"
        for _, value, closed, _, _ in rows:
            assert abs(float(value) - float(closed)) <= 1e-8
        assert float(rows[1][1]) == pytest.approx(math.sqrt(2), abs=1e-10)

    def test_classical(self, capsys):
        code, rec = run_json(capsys, "fpdim", "--k", "2", "--mode", "classical", "--r", "3")
        values = [row[1] for row in rec["results"]["table"]["rows"]]
        assert values == ["1.00000000000000"] + ["0.00000000000000"] * 9

    def test_needs_level(self, capsys):
        code, _, err = run(capsys, "fpdim", "--k", "2")
        assert code == 2


class TestReports:
    def test_limit(self, capsys):
        code, rec = run_json(capsys, "limit", "--k", "2", "--lambda", "2,1", "--r-max", "200")
        res = rec["results"]
        assert code == 0 and res["target"] == 2 and res["converged"] and res["strictly_increasing"]
        assert abs(float(res["extrapolated"]) - 2) <= 1e-6

    def test_galkin(self, capsys):
        code, rec = run_json(capsys, "galkin", "--k-max", "5", "--n-max", "30")
        assert code == 0 and rec["results"]["violations"] == 0
        cases = rec["results"]["equality_cases"].split()
        assert cases == [f"({k},{n})" for n in range(2, 31) for k in range(1, min(5, n - 1) + 1)
                         if k in (1, n - 1)]

    def test_verify_all(self, capsys):
        code, rec = run_json(capsys, "verify", "all")
        assert code == 0 and rec["violations"] == []
        assert set(rec["results"].values()) == {"pass"}


class TestDeterminism:
    def test_byte_identical(self, capsys):
        argv = ("fpdim", "--k", "3", "--n", "6", "--json")
        first = run(capsys, *argv)
        assert run(capsys, *argv, "--threads", "3") == first

    def test_text_render(self, capsys):
        code, out, _ = run(capsys, "fpdim", "--k", "1", "--n", "2")
        assert out.splitlines()[0] == "# fpdim k=1 n=2 mode=quantum"
        assert "lambda" in out.splitlines()[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "grassfp", "rho", "--k", "2", "--n", "4", "--lambda", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "error" in proc.stderr
