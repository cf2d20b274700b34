import csv
import io
import json
import os
import subprocess
import sys

import numpy as np
import pytest

from fusionkit.cli import COMMANDS, dump_fusion_json, load_fusion_json, main
from fusionkit.modular import fusion_tensor


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def run_module(*args, env=None):
    return subprocess.run([sys.executable, "-m", "fusionkit", *args], capture_output=True,
                          env={**os.environ, **(env or {})})


def test_fusion_json_su2_level4(capsys):
    code, out = run(["fusion", "--n", "2", "--level", "4", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["algebra"] == {"n": 2, "k": 4}
    assert doc["weights"] == [[0], [1], [2], [3], [4]]
    N = np.array(doc["data"]["fusion"])
    # spin 1 x spin 1 = 0 + 1 + 2; spin 1/2 x spin 2 = spin 3/2
    assert list(N[2, 2]) == [1, 0, 1, 0, 1]
    assert list(N[1, 4]) == [0, 0, 0, 1, 0]


def test_nimrep_table(capsys):
    code, out = run(["nimrep", "--n", "3", "--level", "3"], capsys)
    assert code == 0
    assert "N_v = [[1, 1], [1, 1]]" in out
    assert "labels 1 2" in out


def test_verify_passes(capsys):
    code, out = run(["verify", "--n", "3", "--level", "5"], capsys)
    assert code == 0
    assert "ALL CHECKS PASSED" in out
    assert "FAIL " not in out
    assert "printed index formulas vs sum rule" in out


def test_verify_json_reports_checks(capsys):
    code, out = run(["verify", "--n", "2", "--level", "3", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["data"]["ok"]
    names = {c["name"] for c in doc["data"]["checks"]}
    assert {"S S^dag = I", "Verlinde integrality", "SU(2) Verlinde = closed form"} <= names


def test_verify_fails_with_exit_1(capsys):
    # a tolerance below the float noise floor makes rounding-level deviations count
    code, out = run(["verify", "--n", "3", "--level", "2", "--tolerance", "1e-300"], capsys)
    assert code == 1
    assert "FAILED:" in out


@pytest.mark.parametrize("argv", [
    ["nimrep", "--n", "2", "--level", "3"],
    ["indices", "--n", "4", "--level", "3"],
    ["reps", "--n", "1", "--level", "3"],
    ["reps", "--n", "3", "--level", "0"],
    ["reps", "--n", "3", "--level", "2", "--tolerance", "-1"],
    ["reps", "--n", "3", "--level", "2", "--input", "x.json"],
    ["bogus", "--n", "3", "--level", "2"],
    ["reps", "--level", "2"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 2


@pytest.mark.parametrize("command", COMMANDS)
@pytest.mark.parametrize("fmt", ["table", "json", "csv"])
def test_every_command_and_format(command, fmt, capsys):
    code, out = run([command, "--n", "3", "--level", "2", "--format", fmt], capsys)
    assert code == 0
    assert out.endswith("\n")
    if fmt == "json":
        assert set(json.loads(out)) == {"algebra", "weights", "data"}
    elif fmt == "csv":
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) >= 2 and len({len(r) for r in rows}) == 1


def test_fusion_csv_rows_are_nonzero_entries(capsys):
    _, out = run(["fusion", "--n", "3", "--level", "2", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["lambda", "mu", "nu", "N"]
    assert len(rows) - 1 == int(np.count_nonzero(fusion_tensor((3, 2)).entries))


def test_complex_numbers_are_pairs(capsys):
    _, out = run(["modular", "--n", "3", "--level", "1", "--format", "json"], capsys)
    s = json.loads(out)["data"]["s"]
    assert len(s) == 3 and all(len(entry) == 2 for row in s for entry in row)
    assert s[0][0] == [pytest.approx(3 ** -0.5, abs=1e-11), 0.0]


def test_twelve_significant_digits(capsys):
    _, out = run(["reps", "--n", "2", "--level", "2", "--format", "json"], capsys)
    dims = [r["dim"] for r in json.loads(out)["data"]["reps"]]
    assert dims[1] == 1.41421356237


def test_out_file(tmp_path, capsys):
    target = tmp_path / "fusion.json"
    code, out = run(["fusion", "--n", "2", "--level", "3", "--format", "json",
                     "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["algebra"] == {"n": 2, "k": 3}


def test_json_round_trip(tmp_path, capsys):
    N = fusion_tensor((3, 3))
    text = dump_fusion_json(N)
    p, t = load_fusion_json(text)
    assert (p.n, p.k) == (3, 3)
    assert np.array_equal(t, N.entries)
    path = tmp_path / "n.json"
    path.write_text(text)
    code, out = run(["verify", "--n", "3", "--level", "3", "--input", str(path),
                     "--format", "json"], capsys)
    assert code == 0
    imported = json.loads(out)["data"]
    assert imported["ok"]
    # exporting via the CLI and re-importing gives the same report
    run(["fusion", "--n", "3", "--level", "3", "--format", "json", "--out", str(path)], capsys)
    code2, out2 = run(["verify", "--n", "3", "--level", "3", "--input", str(path),
                       "--format", "json"], capsys)
    assert code2 == 0 and out2 == out


def test_tampered_import_fails(tmp_path, capsys):
    doc = json.loads(dump_fusion_json(fusion_tensor((3, 2))))
    doc["data"]["fusion"][3][3][1] += 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out = run(["verify", "--n", "3", "--level", "2", "--input", str(path)], capsys)
    assert code == 1
    assert "associativity" in out


def test_import_rejects_wrong_weights():
    doc = json.loads(dump_fusion_json(fusion_tensor((3, 2))))
    doc["weights"] = doc["weights"][::-1]
    with pytest.raises(ValueError):
        load_fusion_json(json.dumps(doc))


def test_module_entry_point_byte_stable():
    args = ("indices", "--n", "3", "--level", "6", "--format", "json")
    a = run_module(*args)
    b = run_module(*args, env={"FUSIONKIT_THREADS": "1"})
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert run_module("nimrep", "--n", "2", "--level", "3").returncode == 2
