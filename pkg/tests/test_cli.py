import json

import pytest

from gindepth.cli import main, run, to_json, to_text


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_obstruct_worked_example(corpus, capsys):
    code, out, _ = invoke(capsys, "obstruct", str(corpus / "borel_obstructed.ideal"), "--json")
    doc = json.loads(out)
    assert code == 2
    assert doc["result"]["verdict"] == "obstructed" and doc["result"]["obstructed_at"] == 2
    r2 = doc["result"]["checks"][1]
    assert r2["u"] == "x1" and r2["conclusion1"] is False


def test_depth_quartic(corpus, capsys):
    code, out, _ = invoke(capsys, "depth", "--s", "2", str(corpus / "quartic.ideal"), "--seed", "7", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["depth_claim"] == 1 and doc["seed"] == 7


def test_depth_all_sections(corpus, capsys):
    code, out, _ = invoke(capsys, "depth", str(corpus / "cubic.ideal"), "--json")
    reports = json.loads(out)["result"]["reports"]
    assert code == 0 and [r["s"] for r in reports] == [1, 2]
    assert all(not r["criterion_triggered"] for r in reports)


def test_hilbert_cubic(corpus, capsys):
    code, out, _ = invoke(capsys, "hilbert", str(corpus / "cubic.ideal"), "--json")
    res = json.loads(out)["result"]
    assert code == 0 and res["q"] == [1, 2] and res["dim"] == 2 and res["e"] == [3, 2]
    assert res["q_text"] == "1 + 2*t"


def test_report_keys(corpus):
    report, _ = run(["gin", str(corpus / "cubic.ideal")])
    assert set(report) == {"command", "input_digest", "ring", "field", "seed", "trials", "result", "warnings"}
    assert report["field"] == "p:32003" and report["trials"] == 3
    assert report["result"]["gin"] == ["x1^2", "x1*x2", "x2^2"]


@pytest.mark.parametrize("command", ["hilbert", "in", "gin", "depth", "verify"])
def test_json_is_deterministic(corpus, command):
    argv = [command, str(corpus / "quartic.ideal"), "--seed", "3"]
    first, second = to_json(run(argv)[0]), to_json(run(argv)[0])
    assert first == second


def test_text_output_mirrors_json(corpus, capsys):
    code, out, _ = invoke(capsys, "section", str(corpus / "borel_obstructed.ideal"))
    report, _ = run(["section", str(corpus / "borel_obstructed.ideal")])
    assert out.strip() == to_text(report)
    for key in ("deg_SJ", "deg_artinian", "rank", "jump_is_one"):
        assert key in out


def test_regularity_caveat_over_prime_field(corpus):
    report, _ = run(["depth", "--s", "1", str(corpus / "hyperplane.ideal")])
    assert any("characteristic-zero" in w for w in report["warnings"])
    report, _ = run(["depth", "--s", "1", str(corpus / "hyperplane.ideal"), "--field", "q"])
    assert not any("characteristic-zero" in w for w in report["warnings"])


EXPECTED_EXIT = {
    ("obstruct", "borel_obstructed"): 2,
    ("borel", "borel_obstructed"): 0,
    ("section", "borel_obstructed"): 2,  # not the gin of a prime: structural violations
    ("verify", "borel_obstructed"): 0,
    ("hilbert", "borel_obstructed"): 0,
    ("depth", "cubic"): 0,
    ("depth", "quartic"): 0,
    ("verify", "cubic"): 0,
    ("in", "quartic"): 0,
    ("gin", "rnc4"): 0,
    ("obstruct", "cubic"): 1,
    ("borel", "quartic"): 1,
    ("section", "cubic"): 1,
}


@pytest.mark.parametrize("command, name", sorted(EXPECTED_EXIT))
def test_exit_code_contract(corpus, capsys, command, name):
    code, _, err = invoke(capsys, command, str(corpus / f"{name}.ideal"))
    assert code == EXPECTED_EXIT[command, name]
    if code == 1:
        assert "monomial" in err


def test_non_borel_monomial_input(tmp_path, capsys):
    path = tmp_path / "x2.ideal"
    path.write_text("ring 2\nx2\n")
    assert invoke(capsys, "borel", str(path))[0] == 2
    assert invoke(capsys, "obstruct", str(path))[0] == 2


@pytest.mark.parametrize("argv", [
    ["frobnicate", "x.ideal"],
    ["hilbert"],
    ["hilbert", "x.ideal", "--bogus"],
    ["hilbert", "/nonexistent/file.ideal"],
    ["hilbert", "x.ideal", "--field", "p:10"],
])
def test_usage_errors_exit_one(argv, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "x.ideal").write_text("ring 1\nx1\n")
    code, _, err = invoke(capsys, *argv)
    assert code == 1 and err


def test_parse_error_exit(tmp_path, capsys):
    path = tmp_path / "bad.ideal"
    path.write_text("ring 2\nx3\n")
    code, _, err = invoke(capsys, "hilbert", str(path))
    assert code == 1 and "line 2, column 1: variable index exceeds ring size" in err


def test_stdin_input(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("ring 2\nx1^2\nx1*x2\nx2^2\n"))
    code, out, _ = invoke(capsys, "hilbert", "-", "--json")
    assert code == 0 and json.loads(out)["result"]["multiplicity"] == 3
