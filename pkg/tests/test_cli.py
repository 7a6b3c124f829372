import csv
import io
import json

import pytest

from oddlength.cli import run_cli
from oddlength.poly import IntPolynomial


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_stats_worked_example():
    code, out, _ = run("stats", "--group", "B", "--window", "-2,4,3,-1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["odd_length"] == 4
    assert (doc["oinv"], doc["oneg"], doc["onsp"]) == (2, 1, 1)
    assert doc["chessboard"] == "none" and doc["chi"] is None


def test_stats_text():
    code, out, _ = run("stats", "--group", "A", "--window", "4,2,1,5,3")
    assert code == 0
    assert "odd_length     3" in out
    assert "length         5" in out
    assert "oinv" not in out


def test_gf_matches_closed():
    _, gf, _ = run("gf", "--group", "A", "--n", "5", "--set", "")
    _, closed, _ = run("closed", "--formula", "sn-quotient", "--n", "5", "--set", "")
    assert gf == closed == "1 - x^2 - x^4 + x^6\n"


def test_json_round_trip():
    code, out, _ = run("gf", "--group", "B", "--n", "3", "--set", "0,2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["set"] == [0, 2]
    _, closed, _ = run("closed", "--formula", "conjB", "--n", "3", "--set", "0,2", "--format", "json")
    assert IntPolynomial.from_json(doc["poly"]) == IntPolynomial.from_json(json.loads(closed)["poly"])


def test_chi_flag_implies_chessboard():
    _, a, _ = run("gf", "--group", "A", "--n", "6", "--set", "1", "--chi")
    _, b, _ = run("gf", "--group", "A", "--n", "6", "--set", "1", "--restrict", "chess", "--chi")
    _, c, _ = run("closed", "--formula", "conjA", "--n", "6", "--set", "1")
    assert a == b == c


def test_csv_sweep():
    code, out, _ = run("gf", "--group", "A", "--n", "4", "--all-sets", "--restrict", "plus",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "set", "coeffs"]
    assert len(rows) == 9
    assert rows[1] == ["4", "", "[1,0,-1]"]
    assert '"1,3"' in out


def test_all_sets_json_matches_closed():
    _, gf, _ = run("gf", "--group", "A", "--n", "6", "--all-sets", "--restrict", "minus",
                   "--format", "json")
    _, closed, _ = run("closed", "--formula", "chessboard-minus", "--n", "6", "--all-sets",
                       "--format", "json")
    assert [r["poly"] for r in json.loads(gf)["rows"]] == [r["poly"] for r in json.loads(closed)["rows"]]


def test_threads_do_not_change_output():
    docs = {run("gf", "--group", "B", "--n", "4", "--all-sets", "--threads", str(t),
                "--format", "json")[1] for t in (1, 2, 8)}
    assert len(docs) == 1


def test_closed_without_set():
    code, out, _ = run("closed", "--formula", "b-ascending", "--n", "3")
    assert code == 0 and out == "1 - x - x^3 + x^4\n"


@pytest.mark.parametrize("argv", [
    ["stats", "--group", "C", "--window", "1"],
    ["stats", "--group", "A", "--window", "1,1"],
    ["gf", "--group", "A", "--n", "4"],
    ["gf", "--group", "A", "--n", "4", "--set", "4"],
    ["gf", "--group", "A", "--n", "4", "--set", "1", "--all-sets"],
    ["gf", "--group", "A", "--n", "4", "--set", "", "--threads", "0"],
    ["closed", "--formula", "sn-full", "--n", "4", "--set", "1"],
    ["closed", "--formula", "conjA", "--n", "4"],
    ["closed", "--formula", "chessboard-minus", "--n", "5", "--set", ""],
    ["closed", "--formula", "nope", "--n", "4"],
    ["verify", "--suite", "nope"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_resource_limit_refusal():
    code, out, err = run("gf", "--group", "B", "--n", "9", "--set", "")
    assert code == 3 and out == "" and "limit" in err
    assert run("verify", "--max-n-a", "15")[0] == 3


def test_verify_subset():
    code, out, _ = run("verify", "--suite", "eq_chessA0,cor4_4_full", "--max-n-a", "5",
                       "--max-n-b", "4", "--report", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [r["identity"] for r in doc["reports"]] == ["eq_chessA0", "cor4_4_full"]


def test_verify_failure_exit_status(monkeypatch):
    from oddlength import verifier
    monkeypatch.setattr(verifier, "closed_sn_full", lambda n: IntPolynomial([1]))
    code, out, _ = run("verify", "--suite", "cor4_4_full", "--max-n-a", "4", "--max-n-b", "3")
    assert code == 1
    assert out.startswith("FAIL")
    assert "counterexample" in out


def test_verify_default_suite():
    code, out, _ = run("verify", "--suite", "default")
    assert code == 0, out
    assert out.rstrip().endswith("23/23 identities passed")
