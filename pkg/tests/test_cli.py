import json
import subprocess
import sys

import pytest

from covres import cache
from covres.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_shape_table(capsys):
    code, out = run(capsys, "shape", "--flavor", "skew", "--r", "4", "--chi", "2,1", "--no-cache")
    assert code == 0
    assert "(2,1,1,1)" in out.out


def test_shape_json_schema(capsys):
    code, out = run(capsys, "shape", "--r", "4", "--chi", "3,1", "--tmax", "4", "--format", "json", "--no-cache")
    doc = json.loads(out.out)
    assert code == 0
    assert doc == {"schema_version": 1, "chi": [3, 1], "r": 4, "flavor": "skew", "terms": {"0": [[3, 1]], "1": [[3, 1, 1, 1]]}}


def test_char_and_branch(capsys):
    code, out = run(capsys, "char", "sp", "--mu", "2,1", "--m", "3", "--eval-dim", "--format", "json", "--no-cache")
    assert code == 0 and json.loads(out.out)["dimension"] == 64
    code, out = run(capsys, "char", "wedge", "--k", "3", "--n", "6", "--format", "json", "--no-cache")
    assert json.loads(out.out)["expansion"] == [{"partition": [3, 1, 1, 1], "mult": 1}, {"partition": [2, 2, 2], "mult": 1}]
    code, out = run(capsys, "branch", "--flavor", "skew", "--r", "4", "--lambda", "2,1", "--format", "json", "--no-cache")
    assert json.loads(out.out)["mults"] == [{"mu": [1], "m": 1}, {"mu": [2, 1], "m": 1}]


def test_verify_euler_exit_code(capsys):
    code, out = run(capsys, "verify", "euler", "--flavor", "skew", "--r", "6", "--chi", "2,2,2", "--degree", "10", "--no-cache")
    assert code == 0 and "PASS" in out.out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from covres import euler

    real = euler.shape_for

    def broken(*a, **k):
        shape = real(*a, **k)
        shape.terms.pop(1, None)
        return shape

    monkeypatch.setattr(euler, "shape_for", broken)
    code, out = run(capsys, "verify", "euler", "--r", "4", "--chi", "1,1", "--degree", "6", "--format", "json", "--no-cache")
    doc = json.loads(out.out)
    assert code == 1 and doc["status"] == "fail"
    assert any("lhs" in d for d in doc["degrees"])


def test_oracle_and_pieri(capsys):
    code, out = run(capsys, "oracle", "invdim", "--flavor", "skew", "--r", "4", "--chi", "1,1", "--degree", "3", "--format", "json", "--no-cache")
    assert code == 0 and json.loads(out.out)["dims"] == [0, 0, 6, 0]
    code, out = run(capsys, "pieri", "solve", "--r", "6", "--chi", "2,2,2", "--format", "json", "--no-cache")
    doc = json.loads(out.out)
    assert code == 0 and doc["complex"] and all(e["scalar"] == "1/1" for e in doc["edges"])
    code, out = run(capsys, "pieri", "solve", "--r", "4", "--chi", "1,1", "--verify-homology", "--degree", "6", "--no-cache")
    assert code == 0
    code, out = run(capsys, "pieri", "nonvanishing", "--alpha", "2,1,1", "--beta", "1,1", "--dim", "4", "--no-cache")
    assert code == 0 and "True" in out.out


def test_usage_errors(capsys):
    code, out = run(capsys, "shape", "--r", "3", "--chi", "1", "--no-cache")
    assert code == 2 and "needs r even" in out.err
    code, out = run(capsys, "tilting", "--r", "4", "--n", "4", "--no-cache")
    assert code == 2
    code, out = run(capsys, "oracle", "invdim", "--r", "6", "--degree", "2", "--no-cache")
    assert code == 2 and "envelope" in out.err
    with pytest.raises(SystemExit) as exc:
        main(["shape", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_csv_output(capsys):
    code, out = run(capsys, "tilting", "--r", "2", "--n", "5", "--variant", "big", "--format", "csv", "--no-cache")
    assert out.out.splitlines() == ["chi", "∅", "(1)", "(2)", "(3)"]


def test_cache_is_transparent(capsys, tmp_path):
    argv = ["verify", "euler", "--r", "4", "--chi", "2,1", "--degree", "9", "--format", "json"]
    _, cold_none = run(capsys, *argv, "--no-cache")
    _, cold = run(capsys, *argv, "--cache-dir", str(tmp_path))
    _, warm = run(capsys, *argv, "--cache-dir", str(tmp_path))
    assert cold_none.out == cold.out == warm.out
    assert any(tmp_path.rglob("*.json"))
    cache.configure(enabled=False)


def test_env_var_cache_dir(tmp_path):
    env = {"COVRES_CACHE_DIR": str(tmp_path / "envcache"), "PATH": "/usr/bin:/bin"}
    argv = [sys.executable, "-m", "covres", "branch", "--r", "4", "--lambda", "3,1", "--format", "json"]
    first = subprocess.run(argv, env=env, capture_output=True, text=True, check=True)
    second = subprocess.run(argv, env=env, capture_output=True, text=True, check=True)
    assert first.stdout == second.stdout
    assert any((tmp_path / "envcache").rglob("*.json"))


def test_selftest(capsys):
    code, out = run(capsys, "selftest", "--no-cache")
    assert code == 0 and "fail" not in out.out
