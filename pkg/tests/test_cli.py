from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conicpoints import FiniteSolutions, LatticePoint
from conicpoints.cli import main

GOLDEN_ARGS = ["2", "-5", "2", "-1", "1", "-1"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# solve

def test_solve_text_golden(capsys):
    code, out, err = run_cli(capsys, "solve", *GOLDEN_ARGS)
    assert code == 0
    assert out == "-2 -1\n0 -1\n1 0\n1 2\n"
    assert err == ""


def test_solve_json_golden(capsys):
    code, out, _ = run_cli(capsys, "solve", "--format", "json", *GOLDEN_ARGS)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "finite"
    assert doc["points"] == [["-2", "-1"], ["0", "-1"], ["1", "0"], ["1", "2"]]
    assert doc["invariants"] == {"k": "3", "i": "80", "delta_q": "9", "m": "-1"}


def test_solve_json_byte_stable(capsys):
    code1, out1, _ = run_cli(capsys, "solve", "--format", "json", *GOLDEN_ARGS)
    code2, out2, _ = run_cli(capsys, "solve", "--format", "json", *GOLDEN_ARGS)
    assert code1 == code2 == 0
    assert out1 == out2


def test_solve_json_roundtrip(capsys):
    _, out, _ = run_cli(capsys, "solve", "--format", "json", *GOLDEN_ARGS)
    doc = json.loads(out)
    assert json.dumps(doc, sort_keys=True, indent=2) + "\n" == out


def test_solve_lines_text(capsys):
    code, out, _ = run_cli(capsys, "solve", "1", "0", "-1", "0", "0", "0")
    assert code == 0
    assert out == (
        "4*x + -4*y = 0 solvable: base=(0,0) dir=(1,1)\n"
        "4*x + 4*y = 0 solvable: base=(0,0) dir=(1,-1)\n"
    )


def test_solve_lines_json_unsolvable(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--format", "json", "9", "0", "-9", "9", "3", "2"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "lines"
    assert [line["solvable"] for line in doc["lines"]] == [False, False]
    assert all("base" not in line for line in doc["lines"])
    assert all(len(line["dir"]) == 2 for line in doc["lines"])
    assert doc["invariants"]["i"] == "0"


def test_solve_invalid_conic(capsys):
    code, out, err = run_cli(capsys, "solve", "1", "0", "1", "0", "0", "-1")
    assert code == 1
    assert out == ""
    assert "not-factorable" in err


def test_solve_invalid_conic_json(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--format", "json", "0", "1", "1", "0", "0", "-1"
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["kind"] == "invalid"
    assert doc["error"]["code"] == "degenerate-alpha"


def test_solve_no_reduce_same_output(capsys):
    _, with_reduce, _ = run_cli(capsys, "solve", *GOLDEN_ARGS)
    _, without, _ = run_cli(capsys, "solve", "--no-reduce", *GOLDEN_ARGS)
    assert with_reduce == without


def test_solve_check_passes(capsys):
    code, _, err = run_cli(capsys, "solve", "--check", *GOLDEN_ARGS)
    assert code == 0
    assert err == ""


def test_solve_check_detects_fault(capsys, monkeypatch):
    import conicpoints.cli as cli_mod

    def tampered(conic, **kwargs):
        return FiniteSolutions((LatticePoint(0, -1), LatticePoint(5, 5)))

    monkeypatch.setattr(cli_mod, "solve", tampered)
    code, _, err = run_cli(capsys, "solve", "--check", *GOLDEN_ARGS)
    assert code == 3
    assert "disagree" in err


def test_solve_check_lines_needs_bound(capsys):
    code, _, err = run_cli(capsys, "solve", "--check", "1", "0", "-1", "0", "0", "0")
    assert code == 4
    assert "--bound" in err


def test_solve_check_lines_with_bound(capsys):
    code, _, err = run_cli(
        capsys, "solve", "--check", "--bound", "8", "1", "0", "-1", "0", "0", "0"
    )
    assert code == 0
    assert err == ""


# ---------------------------------------------------------------------------
# invariants / oracle

def test_invariants_text(capsys):
    code, out, _ = run_cli(capsys, "invariants", *GOLDEN_ARGS)
    assert code == 0
    assert out == "k = 3\ni = 80\ndelta_q = 9\nm = -1\n"


def test_invariants_json(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--format", "json", *GOLDEN_ARGS)
    assert code == 0
    assert json.loads(out) == {
        "invariants": {"k": "3", "i": "80", "delta_q": "9", "m": "-1"}
    }


def test_oracle_matches_solve(capsys):
    _, solved, _ = run_cli(capsys, "solve", *GOLDEN_ARGS)
    code, searched, _ = run_cli(capsys, "oracle", *GOLDEN_ARGS)
    assert code == 0
    assert searched == solved


def test_oracle_degenerate_needs_bound(capsys):
    code, out, err = run_cli(capsys, "oracle", "1", "0", "-1", "0", "0", "0")
    assert code == 4
    assert out == ""
    assert "--bound" in err


def test_oracle_degenerate_with_bound(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--bound", "3", "1", "0", "-1", "0", "0", "0"
    )
    assert code == 0
    assert len(out.splitlines()) == 13


# ---------------------------------------------------------------------------
# theorem1 / sumform

def test_theorem1_text(capsys):
    code, out, _ = run_cli(capsys, "theorem1", "3", "0", "1", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "conic: 1 3 2 0 1 -5"
    assert lines[1:] == ["-10 5", "-5 2", "-5 5", "-1 -1", "-1 2", "4 -1"]


def test_theorem1_json(capsys):
    code, out, _ = run_cli(capsys, "theorem1", "--format", "json", "3", "0", "1", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "finite"
    assert doc["conic"]["j"] == "-5"
    assert doc["invariants"]["i"] == "16"
    assert len(doc["points"]) == 6


def test_theorem1_invalid(capsys):
    code, _, err = run_cli(capsys, "theorem1", "2", "0", "1", "4")
    assert code == 1
    assert "odd" in err


def test_sumform_prime(capsys):
    code, out, _ = run_cli(capsys, "sumform", "1", "1", "-13")
    assert code == 0
    assert out == "-7 -6\n-7 6\n7 -6\n7 6\n"


def test_sumform_obstruction(capsys):
    code, out, err = run_cli(capsys, "sumform", "1", "1", "-2")
    assert code == 0
    assert out == ""
    assert "2 (mod 4)" in err


def test_sumform_obstruction_json(capsys):
    code, out, _ = run_cli(capsys, "sumform", "--format", "json", "1", "1", "-2")
    assert code == 0
    doc = json.loads(out)
    assert doc["points"] == []
    assert doc["obstruction"] == "mod4-obstruction"


def test_sumform_degenerate_rejected(capsys):
    code, _, err = run_cli(capsys, "sumform", "1", "1", "0")
    assert code == 1
    assert "line pair" in err


# ---------------------------------------------------------------------------
# input handling

def test_input_file(tmp_path, capsys):
    doc = {
        "alpha": "2",
        "beta": "-5",
        "gamma": "2",
        "delta": "-1",
        "epsilon": "1",
        "j": "-1",
    }
    path = tmp_path / "conic.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "solve", "--input", str(path))
    assert code == 0
    assert out == "-2 -1\n0 -1\n1 0\n1 2\n"


def test_input_file_bad_schema(tmp_path, capsys):
    path = tmp_path / "conic.json"
    path.write_text(json.dumps({"alpha": "2"}))
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--input", str(path)])
    assert exc.value.code == 2


def test_input_file_non_canonical_integer(tmp_path, capsys):
    doc = {
        "alpha": "2",
        "beta": "-5",
        "gamma": "2",
        "delta": "-1",
        "epsilon": "1",
        "j": "007",
    }
    path = tmp_path / "conic.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--input", str(path)])
    assert exc.value.code == 2


def test_input_file_numeric_json_rejected(tmp_path, capsys):
    doc = {"alpha": 2, "beta": -5, "gamma": 2, "delta": -1, "epsilon": 1, "j": -1}
    path = tmp_path / "conic.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--input", str(path)])
    assert exc.value.code == 2


def test_missing_input_file(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--input", "/no/such/file.json"])
    assert exc.value.code == 2


def test_wrong_coefficient_count(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "1", "2", "3"])
    assert exc.value.code == 2


def test_leading_zero_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "007", "0", "-1", "0", "0", "0"])
    assert exc.value.code == 2


def test_minus_zero_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "-0", "0", "-1", "0", "0", "0"])
    assert exc.value.code == 2


def test_coefficients_and_input_conflict(tmp_path, capsys):
    path = tmp_path / "conic.json"
    path.write_text("{}")
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--input", str(path), "1", "2", "3", "4", "5", "6"])
    assert exc.value.code == 2


def test_large_coefficients_survive(capsys):
    # 10^30 scale coefficients: arbitrary precision end to end
    big = str(10**30)
    code, out, _ = run_cli(
        capsys, "invariants", "--format", "json", "1", "0", "-1", "0", "0", big
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["invariants"]["delta_q"] == str(-4 * 10**30)


# ---------------------------------------------------------------------------
# divisor cap environment variable

def test_divisor_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("CONIC_DIVISOR_CAP", "10")
    code, _, err = run_cli(capsys, "solve", "--no-reduce", *GOLDEN_ARGS)
    assert code == 1
    assert "divisor-limit" in err
    # the reduced route only enumerates divisors of 10, so it stays allowed
    code, out, _ = run_cli(capsys, "solve", *GOLDEN_ARGS)
    assert code == 0
    assert out.count("\n") == 4


def test_divisor_cap_env_invalid(capsys, monkeypatch):
    monkeypatch.setenv("CONIC_DIVISOR_CAP", "zero")
    with pytest.raises(SystemExit) as exc:
        main(["solve", *GOLDEN_ARGS])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "conicpoints", "solve", *GOLDEN_ARGS],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "-2 -1\n0 -1\n1 0\n1 2\n"
