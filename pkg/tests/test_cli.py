import json
import subprocess
import sys

import pytest

from qhh.cli import main, run
from qhh.tables import parse_dims_csv, parse_multiplicity_csv, parse_multiplicity_json


def ok(*argv):
    out, err, code = run(list(argv))
    assert code == 0, err
    return out


def test_hh_two_loops():
    assert parse_dims_csv(ok("hh", "--degrees", "2..7", "--format", "csv")) == {
        2: 6, 3: 12, 4: 24, 5: 48, 6: 96, 7: 192
    }


def test_hh_one_loop():
    out = ok("hh", "--quiver", "one-loop", "--degrees", "0..5", "--format", "json")
    assert [r["dim"] for r in json.loads(out)["dims"]] == [2, 1, 1, 1, 1, 1]


def test_hh_text():
    assert ok("hh", "--degrees", "3").splitlines() == ["n  dim HH^n", "3  12"]


def test_empty_range_is_usage_error():
    assert run(["hh", "--degrees", "5..2"])[2] == 2
    assert run(["hh", "--degrees", "x"])[2] == 2


def test_decompose():
    t = parse_multiplicity_csv(ok("decompose", "--degrees", "2..7", "--format", "csv"))
    assert t.by_weight(7) == {8: 1, 6: 6, 4: 15, 2: 19, 0: 9}
    assert parse_multiplicity_json(ok("decompose", "--degrees", "2..2", "--format", "json")).rows == {2: (1, 1)}


def test_decompose_text_matches_table():
    lines = ok("decompose", "--degrees", "2..7").splitlines()
    assert lines[-1].split() == ["HH^7", "||", "9", "19", "15", "6", "1"]


def test_decompose_rejects_other_quivers(tmp_path):
    three = tmp_path / "three.json"
    three.write_text(json.dumps({"vertices": ["e"], "arrows": [{"id": c, "src": "e", "tgt": "e"} for c in "abc"]}))
    out, err, code = run(["decompose", "--quiver", str(three), "--degrees", "2..3"])
    assert code == 2 and "two-loops" in err


def test_bracket_examples():
    assert ok("bracket", "(b,b)-(a,a)", "(a,b)") == "2*(a,b)\n"
    assert ok("bracket", "--quiver", "one-loop", "(a,a)", "(aaa,e)") == "-3*(aaa,@e)\n"
    assert ok("bracket", "(a,a)", "0*(a,b)") == "0\n"


def test_bracket_cohomology_flag():
    assert ok("bracket", "--cohomology", "(a,b)", "(b,a)") == "-(a,a) + (b,b)\n"
    # shifting a cocycle by D_1(a,e) = 2(aa,a) + (ab,b) + (ba,b) leaves the class alone
    plain = ok("bracket", "--cohomology", "(a,b)", "(ab,a)")
    shifted = ok("bracket", "--cohomology", "(a,b)", "(ab,a) + 2*(aa,a) + (ab,b) + (ba,b)")
    assert plain == shifted
    assert plain == "3/2*(ab,b) + 1/2*(ba,b)\n"
    out, err, code = run(["bracket", "--cohomology", "(a,@e)", "(a,a)", "--quiver", "one-loop"])
    assert code == 2 and "cocycle" in err


def test_bracket_formats():
    body = json.loads(ok("bracket", "--format", "json", "(b,b)-(a,a)", "(a,b)"))
    assert body == {"degree": 1, "terms": [{"pair": "(a,b)", "coefficient": "2"}]}
    assert ok("bracket", "--format", "csv", "(b,b)-(a,a)", "(a,b)") == "path,shortcut,coefficient\na,b,2\n"


def test_bracket_parse_error():
    assert run(["bracket", "(a,a", "(a,b)"])[2] == 2


def test_verify_properties_two_loops():
    out = ok("verify", "--suite", "properties", "--cases", "30")
    assert "all checks passed" in out and "sl2 relations" in out


def test_verify_oracle_one_loop():
    out = ok("verify", "--quiver", "one-loop", "--suite", "oracle", "--cases", "20")
    assert "dims 2,1,1,1,1" in out


def test_corrupted_quiver_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["e"], "arrows": [{"id": "a", "src": "e"}]}')
    out, err, code = run(["verify", "--quiver", str(bad)])
    assert code == 2 and err
    assert run(["hh", "--quiver", str(tmp_path / "missing.json"), "--degrees", "1"])[2] == 2


def test_budget_exit_code(monkeypatch):
    assert run(["hh", "--degrees", "0..12", "--budget", "500"])[2] == 3
    monkeypatch.setenv("QHH_BUDGET", "100")
    assert run(["hh", "--degrees", "8"])[2] == 3
    monkeypatch.setenv("QHH_BUDGET", "lots")
    assert run(["hh", "--degrees", "2"])[2] == 2
    assert run(["hh", "--degrees", "2", "--budget", "0"])[2] == 2


def test_deterministic_output():
    argv = ["verify", "--suite", "all", "--quiver", "one-loop", "--seed", "5", "--cases", "20", "--format", "json"]
    assert run(argv) == run(argv)
    assert ok("decompose", "--degrees", "2..6", "--format", "csv") == ok("decompose", "--degrees", "2..6", "--format", "csv")


def test_main_writes_streams(capsys):
    assert main(["hh", "--degrees", "1"]) == 0
    assert "4" in capsys.readouterr().out
    assert main(["hh", "--degrees", "2..1"]) == 2
    assert "empty degree range" in capsys.readouterr().err


def test_missing_subcommand():
    assert run([])[2] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhh.cli", "bracket", "(b,b)-(a,a)", "(b,a)"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "-2*(b,a)\n"
