import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from alphaspec.cli import fmt, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_spectrum_k4():
    code, out, _ = run("spectrum", "--gen", "complete:4", "--alpha", "0.5")
    assert code == 0
    [rec] = json.loads(out)
    assert rec["eigenvalues"] == [3.0, 1.0, 1.0, 1.0]
    assert rec["energy"] == 3.0
    assert rec["distinct"] == [{"value": 3.0, "multiplicity": 1}, {"value": 1.0, "multiplicity": 3}]


def test_spectrum_cycle_cosines():
    code, out, _ = run("spectrum", "--gen", "cycle:5", "--alpha", "0")
    want = sorted((2 * np.cos(2 * np.pi * j / 5) for j in range(5)), reverse=True)
    assert np.allclose(json.loads(out)[0]["eigenvalues"], want, atol=1e-11)


def test_spectrum_file_order(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("Bw\nA_\n\nC~\n")
    code, out, _ = run("spectrum", "--in", str(f), "--alpha", "0,0.5")
    recs = json.loads(out)
    assert [(r["graph6"], r["alpha"]) for r in recs] == [
        ("Bw", 0.0), ("Bw", 0.5), ("A_", 0.0), ("A_", 0.5), ("C~", 0.0), ("C~", 0.5)]
    assert [r["source"].rsplit(":", 1)[1] for r in recs[::2]] == ["1", "2", "4"]


def test_spectrum_csv():
    code, out, _ = run("spectrum", "--gen", "path:3", "--alpha", "0", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1 and float(rows[0]["energy"]) == pytest.approx(2 * 2**0.5)


def test_parse_error_line_number(tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("A_\nA\n")
    code, out, err = run("spectrum", "--in", str(f))
    assert code == 2 and "line 2" in err


@pytest.mark.parametrize("argv", [
    ("spectrum",),
    ("spectrum", "--gen", "wheel:4"),
    ("spectrum", "--gen", "cycle:4", "--alpha", "1.5"),
    ("spectrum", "--gen", "cycle:4", "--alpha", "x"),
    ("spectrum", "--in", "/nonexistent.g6"),
    ("bogus",),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_bounds_k3_cor1_flag():
    code, out, _ = run("bounds", "--gen", "complete:3", "--alpha", "0")
    [rec] = json.loads(out)
    flags = {b["name"]: b["equality"] for b in rec["bounds"]}
    assert flags["lower_cor1"]
    assert set(rec) >= {"alpha", "y", "c", "energy", "bounds"}


def test_bounds_matching_upper_main_flag():
    _, out, _ = run("bounds", "--gen", "matching:2", "--alpha", "0.5")
    flags = {b["name"]: b["equality"] for b in json.loads(out)[0]["bounds"]}
    assert flags["upper_main"]


def test_bounds_csv_one_row_per_bound(tmp_path):
    f = tmp_path / "corpus.g6"
    f.write_text("Bw\nCr\n")
    code, out, _ = run("bounds", "--in", str(f), "--alpha", "0.3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["source", "graph6", "alpha"]
    assert len(rows) == 1 + 2 * 10


def test_srg_c5_check():
    code, out, _ = run("srg", "5", "2", "0", "1", "--alpha", "0.5", "--check")
    [rec] = json.loads(out)
    assert code == 0 and rec["max_deviation"] < 1e-8
    assert [e["multiplicity"] for e in rec["eigenvalues"]] == [1, 2, 2]


def test_srg_petersen():
    _, out, _ = run("srg", "10", "3", "0", "1", "--alpha", "0", "--check")
    [rec] = json.loads(out)
    assert rec["eigenvalues"] == [
        {"value": 3.0, "multiplicity": 1}, {"value": 1.0, "multiplicity": 5}, {"value": -2.0, "multiplicity": 4}]


@pytest.mark.parametrize("params, code", [
    (("5", "2", "1", "1"), 3),
    (("3", "0", "0", "0"), 4),
    (("5", "3", "1", "3"), 5),
])
def test_srg_exit_codes(params, code):
    got, _, err = run("srg", *params, "--alpha", "0.2")
    assert got == code and err


def test_srg_check_needs_known_family():
    assert run("srg", "9", "4", "1", "2", "--check")[0] == 2
    assert run("srg", "5", "2", "0", "1", "--alpha", "1")[0] == 2


def test_verify_small(tmp_path):
    path = tmp_path / "v.csv"
    code, out, err = run("verify", "--n-max", "4", "--csv", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert "PASSED" in err and "theorem" in err
    assert path.read_text().splitlines() == ["theorem,graph6,alpha,measured"]


def test_verify_two_distinct_census():
    code, out, _ = run("verify", "--n-max", "4", "--theorems", "two_distinct", "--quiet")
    ws = json.loads(out)["theorems"]["two_distinct"]["equality_witnesses"]
    assert {w["graph6"] for w in ws} == {"A_", "Bw", "C~"}


def test_verify_cap():
    code, _, err = run("verify", "--n-max", "9")
    assert code == 2 and "cap" in err


def test_verify_reports_violation_exit_1(monkeypatch):
    from alphaspec import verify as vf

    original = vf.THEOREMS["moments"]
    broken = vf.Theorem("moments", original.description, lambda case: vf.Outcome(False, {"x": 1.0}))
    monkeypatch.setitem(vf.THEOREMS, "moments", broken)
    code, out, _ = run("verify", "--n-max", "2", "--theorems", "moments", "--quiet")
    assert code == 1
    assert json.loads(out)["theorems"]["moments"]["violations"]


def test_list_theorems():
    code, out, _ = run("list-theorems")
    assert code == 0 and "lower_cor1" in out


def test_byte_identical_reruns():
    a = run("bounds", "--gen", "petersen", "--alpha", "0,0.3,0.7")[1]
    b = run("bounds", "--gen", "petersen", "--alpha", "0,0.3,0.7")[1]
    assert a == b


def test_json_round_trip_at_12_digits():
    _, out, _ = run("spectrum", "--gen", "petersen", "--alpha", "0.3")
    doc = json.loads(out)
    again = json.loads(json.dumps(doc))
    assert again == doc
    for v in doc[0]["eigenvalues"]:
        assert fmt(v) == v


def test_fmt():
    assert fmt(1 / 3) == 0.333333333333
    assert fmt(2.0000000000001) == 2.0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "alphaspec", "srg", "5", "2", "1", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 3
