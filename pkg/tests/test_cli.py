import io
import json
import subprocess
import sys

import pytest

from isodom.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_star_family(capsys):
    code, out, _ = run(["compute", "--family", "star", "--k", "3"], capsys)
    report = json.loads(out)
    assert code == 0
    assert report["parameters"]["gamma_t"]["value"] == 2
    assert report["parameters"]["i0"]["value"] == 1


def test_compute_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["compute"], capsys, "D?{\n", monkeypatch)
    assert code == 0 and json.loads(out)["n"] == 5


def test_compute_edge_list_and_csv(capsys, monkeypatch):
    code, out, _ = run(["compute", "--format", "csv"], capsys, "0 1\n1 2\n2 3\n", monkeypatch)
    header, row = out.strip().splitlines()
    assert code == 0 and header.startswith("graph6,n,m,diam,gamma")
    assert row.startswith("Ch,4,3,3,2")


def test_compute_malformed_line(capsys, monkeypatch):
    code, _, err = run(["compute"], capsys, "D?{\nD?\n", monkeypatch)
    assert code == 2 and "line 2" in err


def test_compute_text(capsys):
    code, out, _ = run(["compute", "--family", "cycle", "--k", "5", "--format", "text"], capsys)
    assert code == 0 and "gamma_t" in out


def test_family_and_input_are_exclusive(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--family", "star", "--input", "x.g6"])
    assert exc.value.code == 2


def test_verify_all_pass(capsys):
    code, out, _ = run(["verify", "--universe", "connected", "--n-max", "5"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["all_pass"]


def test_verify_trees_single_theorem(capsys):
    code, out, _ = run(["verify", "--universe", "trees", "--n-max", "12", "--theorem", "leaf-support-gamma"], capsys)
    doc = json.loads(out)
    assert code == 0 and [v["theorem_id"] for v in doc["verdicts"]] == ["leaf-support-gamma"]


def test_verify_cap_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n-max", "30"])
    assert exc.value.code == 2


def test_verify_false_claim_exits_one(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Cs\n")
    code, out, _ = run(["verify", "--universe", "file", "--input", str(path), "--claim", "gamma_t < i0 + 1"], capsys)
    doc = json.loads(out)
    assert code == 1
    claim = [v for v in doc["verdicts"] if v["theorem_id"].startswith("claim:")][0]
    assert claim["violations"][0]["graph6"] == "Cs"


def test_hunt_finds_counterexample(capsys):
    code, out, _ = run(["hunt", "gamma_t <= i0", "--n-max", "5", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 1
    assert doc["counterexample"]["graph6"] == "A_"  # K2


def test_hunt_exhausts_true_bound(capsys):
    code, out, _ = run(["hunt", "gamma_t <= i0 + 1", "--n-max", "7"], capsys)
    assert code == 0 and out.startswith("exhausted")


def test_hunt_trivial_counterexample(capsys):
    code, out, _ = run(["hunt", "gamma <= 0", "--format", "json"], capsys)
    assert code == 1 and json.loads(out)["counterexample"]["graph6"] == "@"


def test_hunt_bad_claim(capsys):
    code, _, err = run(["hunt", "gamma <="], capsys)
    assert code == 2 and "error" in err


def test_enumerate_and_sweep_csv(capsys, tmp_path):
    code, out, _ = run(["enumerate", "--n-min", "4", "--n-max", "4"], capsys)
    assert code == 0 and len(out.split()) == 6
    target = tmp_path / "table.csv"
    code, _, _ = run(["sweep", "--universe", "trees", "--n-max", "6", "--format", "csv", "--output", str(target)], capsys)
    assert code == 0 and len(target.read_text().splitlines()) == 1 + 1 + 1 + 1 + 2 + 3 + 6


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "isodom", "compute", "--family", "star", "--k", "2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["parameters"]["gamma_t"]["value"] == 2
