import json

import pytest

from spindec.cli import Config, main, render_table


@pytest.fixture
def run(capsys, tmp_path):
    def go(*argv):
        code = main(["--cache-dir", str(tmp_path / "c"), *argv])
        return code, capsys.readouterr().out
    return go


def test_decomp_tables(run):
    code, out = run("decomp", "4")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0].split() == ["λ", "4", "3,1"] and len(lines) == 2 + 5
    code, out = run("decomp", "0", "--format", "csv")
    assert out.splitlines() == ["λ,-", "-,1"]
    code, out = run("decomp", "2", "--format", "csv")
    assert out.splitlines() == ["λ,2", "2,1", "\"1,1\",1"]


def test_spindecomp(run):
    code, out = run("spindecomp", "3", "--format", "csv")
    assert out.splitlines() == ["λ,ε,3,\"2,1\"", "3,0,0,1", "\"2,1\",±,1,0"]
    code, out = run("spindecomp", "1", "--format", "json")
    assert json.loads(out)["rows"] == {"1": {"1": 1}}
    code, out = run("spindecomp", "6", "--format", "json")
    doc = json.loads(out)
    assert doc["rows"]["5,1"]["3,2,1"] == 1 and doc["rows"]["4,2"]["4,2"] == 2


def test_json_emit_parse_emit(run):
    from spindec.modrep import DecompositionMatrix
    from spindec.spin import SpinDecompositionMatrix
    _, out = run("decomp", "5", "--format", "json")
    assert DecompositionMatrix.from_json(out).to_json() == out
    _, out = run("spindecomp", "5", "--format", "json")
    assert SpinDecompositionMatrix.from_json(out).to_json() == out


def test_latex_and_text(run):
    _, out = run("decomp", "3", "--format", "latex")
    assert out.splitlines()[0].endswith(r"\\ \hline") and "&" in out
    _, out = run("spindecomp", "4")
    assert "ε" in out.splitlines()[0]


def test_max_n(run):
    with pytest.raises(SystemExit):
        run("decomp", "10")
    code, _ = run("--max-n", "0", "decomp", "1")
    assert code == 2


def test_coefficients(run):
    assert run("coeff", "gab", "3", "1")[1].strip() == "1"
    assert run("coeff", "lr", "2,1", "2,1", "3,2,1")[1].strip() == "2"
    assert run("lr", "2,1", "2,1", "3,2,1")[1].strip() == "2"
    assert run("shifted", "2,1", "2,1")[1].strip() == "1"
    out = run("coeff", "bsm", "5")[1].splitlines()
    assert out[0] == "1 -1 -1"
    doc = json.loads(run("coeff", "bsm", "6", "--format", "json")[1])
    assert doc["sequence"] == [1, -2, 1]
    with pytest.raises(SystemExit):
        run("coeff", "gab", "3")


def test_verify_exit_codes(run, tmp_path):
    report = tmp_path / "r.json"
    code, out = run("verify", "bss", "t1", "--n-max", "5", "--report", str(report))
    assert code == 0 and out.count("PASS") == 2
    assert json.loads(report.read_text())["passed"] is True
    code, out = run("verify", "reg", "--n-max", "3", "--format", "json")
    assert json.loads(out)["checks"][0]["check"] == "reg"
    with pytest.raises(SystemExit):
        run("verify", "bogus")


def test_verify_reports_failures(run, monkeypatch):
    from spindec import verify
    monkeypatch.setattr(verify, "two_part_decomposition", lambda n, h: {0: 2})
    code, out = run("verify", "two_part", "--n-max", "3")
    assert code == 1 and "FAIL" in out


def test_seed_is_honoured(run):
    a = run("--seed", "4", "decomp", "6", "--format", "json")[1]
    b = run("--seed", "4", "decomp", "6", "--format", "json")[1]
    assert a == b


def test_config_validation(tmp_path):
    with pytest.raises(ValueError):
        Config(max_n=0)
    with pytest.raises(ValueError):
        Config(fmt="xml")
    assert Config(cache_dir=tmp_path / "x").cache_dir.exists()


def test_render_table_alignment():
    out = render_table(["a", "bb"], ["x"], [[1], [22]], "text")
    assert out.splitlines()[2] == "a    1"
