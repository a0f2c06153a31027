import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from intervalcycles import cli, successors
from intervalcycles.polynomial import IntPolynomial

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_digraph_dot_golden():
    code, out, _ = call("digraph", "(123)", "--format", "dot")
    assert code == 0
    assert out == (GOLDEN / "digraph_123.dot").read_text()
    assert "v1 -> v2;" in out and "v2 -> v1;" in out and "v2 -> v2;" in out


def test_digraph_text_and_json():
    assert call("digraph", "(1324)")[1] == "v1+ 0 0 1\nv2- 0 1 1\nv3- 1 0 0\n"
    obj = json.loads(call("digraph", "(12)", "--format", "json")[1])
    assert obj == {"n": 1, "signs": ["-"], "edges": [[1, 1]]}


def test_charpoly_golden():
    code, out, _ = call("charpoly", "(135246)")
    assert code == 0
    assert out == (GOLDEN / "charpoly_135246.txt").read_text()
    assert json.loads(call("charpoly", "(12)", "--format", "json")[1]) == {"coeffs": ["-1", "1"]}


def test_successors_listing():
    code, out, _ = call("successors", "(12)", "--cyclic-only")
    assert code == 0
    lines = out.splitlines()
    assert lines == [
        "cyclic (1423) swaps=1 modality=-1",
        "cyclic (1324) swaps=2 modality=+1",
    ]
    full = call("successors", "(12)")[1].splitlines()
    assert len(full) == 4 and full[2].startswith("non-cyclic")
    assert call("successors", "(123)", "--unimodal-only")[1] == "(135246) swaps=3\n"
    assert call("successors", "(1)", "--unimodal-only")[1] == "(12) swaps=1\n"


def test_successors_cap():
    code, _, err = call("successors", "(12345)", "--max-n", "4")
    assert code == 1 and "CapExceeded" in err


def test_double():
    assert call("double", "(12)", "--swaps", "2")[1] == "(1324)\ncyclic: true\n"
    assert call("double", "(12)", "--swaps", "1,2")[1] == "4,3,2,1\ncyclic: false\n"
    obj = json.loads(call("double", "(1324)", "--swaps", "2,3,4", "--format", "json")[1])
    assert obj["notation"] == "(15472638)" and obj["cyclic"] is True
    code, out, _ = call("double", "(12)", "--swaps", "2", "--format", "dot")
    assert code == 0 and out.startswith("digraph G {")
    code, _, err = call("double", "(12)", "--swaps", "1,2", "--format", "dot")
    assert code == 1 and "EvenSwapCount" in err


def test_cascade_text_and_json():
    code, out, _ = call("cascade", "(1)", "--levels", "3", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 (1) 1 ok"
    assert lines[3] == "3 (15472638) l^7 - l^6 - l^5 + l^4 - l^3 + l^2 + l - 1 ok"
    obj = json.loads(call("cascade", "(123)", "--levels", "1", "--format", "json")[1])
    assert obj["levels"][1]["notation"] == "(135246)"
    code, _, err = call("cascade", "(123)", "--levels", "5")
    assert code == 1 and "CapExceeded" in err


def test_cascade_verify_fails_on_formula_violation(monkeypatch):
    real = successors.char_poly_of

    def corrupted(theta):
        p = real(theta)
        return p + IntPolynomial([1]) if len(theta) == 4 else p

    monkeypatch.setattr(successors, "char_poly_of", corrupted)
    code, _, err = call("cascade", "(1)", "--levels", "3", "--verify")
    assert code == 1 and "FormulaViolation" in err
    code, out, _ = call("cascade", "(1)", "--levels", "3")
    assert code == 0
    assert [ln.split()[-1] for ln in out.splitlines()] == ["ok", "ok", "FAIL", "FAIL"]


def test_forces():
    code, out, _ = call("forces", "(123)", "(12)")
    assert code == 0
    assert out == "true\nwitness: loop [1,2]; points {5/3, 8/3}; type (12)\n"
    assert call("forces", "(12)", "(123)")[1] == "false\n"
    obj = json.loads(call("forces", "(123)", "(123)", "--format", "json")[1])
    assert obj["forces"] is True and obj["witness"]["loop"] is None


def test_forced_types():
    assert call("forced-types", "(123)", "--max-period", "2")[1] == "(1)\n(12)\n(123)\n"
    code, _, err = call("forced-types", "(123)", "--max-period", "20")
    assert code == 1 and "CapExceeded" in err


def test_logistic():
    code, out, _ = call("logistic", "--a", "3.5")
    assert code == 0
    assert out.splitlines()[:2] == ["period 4", "type (1324)"]
    obj = json.loads(call("logistic", "--a", "3.2", "--format", "json")[1])
    assert obj["period"] == 2 and obj["orbit_type"] == [2, 1]
    code, _, err = call("logistic", "--a", "3.9")
    assert code == 1 and "NoAttractorDetected" in err
    code, _, err = call("logistic", "--a", "5")
    assert code == 1 and "outside" in err


def test_logistic_scan_csv():
    code, out, _ = call("logistic-scan", "--from", "3.2", "--to", "3.5", "--step", "0.1",
                        "--burn-in", "20000")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["a", "period"] and len(rows) == 5


def test_certify_cascade():
    code, out, _ = call("certify-cascade", "--seed", "(1)", "--a-list", "2.5,3.2,3.5,3.55")
    assert code == 0
    assert out.count(" match") == 4
    code, out, _ = call("certify-cascade", "--seed", "(123)", "--a-list", "3.835,3.845",
                        "--format", "json")
    assert code == 0 and json.loads(out)["all_match"] is True
    code, out, _ = call("certify-cascade", "--seed", "(123)", "--a-list", "3.2")
    assert code == 1 and "MISMATCH" in out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nosuch"],
        ["digraph"],
        ["digraph", "(12)", "--format", "csv"],
        ["cascade", "(1)"],
        ["double", "(12)", "--swaps", "x"],
        ["logistic", "--a", "abc"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, _, _ = call(*argv)
    assert code == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv, name",
    [
        (["digraph", "(213)"], "CycleSyntaxError"),
        (["charpoly", "(124)"], "NotABijection"),
        (["digraph", "1,2"], "NotASingleCycle"),
        (["double", "(12)", "--swaps", "3"], "OutOfRange"),
    ],
)
def test_domain_errors_exit_one(argv, name):
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    assert err.startswith(f"error: {name}:")


def test_output_is_deterministic():
    for argv in (["successors", "(1324)", "--format", "json"], ["forced-types", "(123)", "--max-period", "5"],
                 ["cascade", "(123)", "--levels", "2", "--format", "json"]):
        assert call(*argv) == call(*argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "intervalcycles", "charpoly", "(1324)"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "l^3 - l^2 - l + 1\n"
