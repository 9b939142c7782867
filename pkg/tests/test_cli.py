import json

import pytest

from hecke_clifford.cli import main


@pytest.fixture(autouse=True)
def cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("HECKE_CLIFFORD_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tableaux_listing(capsys):
    code, out, _ = run(capsys, "tableaux", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [(d["shape"], d["m"]) for d in data] == [([3], 1), ([2, 1], 1)]


def test_tableaux_column_example(capsys):
    code, out, _ = run(capsys, "tableaux", "--shape", "4,3,1", "--which", "column", "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["tableaux"][0]["rows"] == [[1, 2, 4, 7], [3, 5, 8], [6]]


def test_tableaux_rejects_non_strict(capsys):
    code, _, err = run(capsys, "tableaux", "--shape", "2,2")
    assert code == 2 and "strict" in err


def test_psi_column_leading_term(capsys):
    code, out, _ = run(capsys, "psi", "--shape", "2,1", "--which", "column")
    assert code == 0
    assert "leading term: T_321 with coefficient (1)" in out


def test_psi_one_box(capsys):
    code, out, _ = run(capsys, "psi", "--shape", "1")
    assert code == 0 and "the element (1)" in out


def test_psi_cache_is_byte_identical(capsys, cache_env):
    run(capsys, "psi", "--shape", "2,1", "--which", "all")
    files = sorted(cache_env.iterdir())
    first = [f.read_bytes() for f in files]
    code, out, _ = run(capsys, "psi", "--shape", "2,1", "--which", "all")
    assert code == 0 and "read from" in out
    assert [f.read_bytes() for f in sorted(cache_env.iterdir())] == first


def test_verify_relations_json(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "relations", "--n", "3", "--format", "json", "--output", str(report))
    assert code == 0
    data = json.loads(out)
    assert set(data) >= {"suite", "n", "checks", "seed", "timings"}
    assert all(c["status"] == "pass" for c in data["checks"])
    assert json.loads(report.read_text()) == data


def test_verify_dims_n5(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dims", "--n", "5")
    assert code == 0 and "PASS" in out


def test_verify_conjecture_is_informational(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "conjecture", "--n", "3")
    assert code == 0 and "informational" in out and "scalar" in out


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--suite", "nope", "--n", "3")[0] == 2
    assert run(capsys, "verify", "--suite", "fusion", "--n", "6")[0] == 2
    assert run(capsys, "psi", "--shape", "4,2", "--which", "99")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_failure_exit_code(capsys, monkeypatch):
    from hecke_clifford import suites
    from hecke_clifford.fusion import CheckResult

    broken = suites.Suite("broken", lambda n, seed: [CheckResult("always-fails", "fail")], heavy=False)
    monkeypatch.setitem(suites.SUITES, "broken", broken)
    code, out, _ = run(capsys, "verify", "--suite", "broken", "--n", "2")
    assert code == 1 and "FAIL" in out
