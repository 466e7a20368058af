import json
import subprocess
import sys

from ratknot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wn_and_if_eval(capsys):
    assert run(capsys, "wn", "2", "-4", "2")[:2] == (0, "C(2,-4,-2,2,2,4,-2)\n")
    assert run(capsys, "if-eval", "C(2,-4,-2)")[:2] == (0, "-16/7\n")
    assert run(capsys, "if-eval", "2", "-4", "-2")[:2] == (0, "-16/7\n")


def test_fraction_and_positive_form(capsys):
    code, out, _ = run(capsys, "fraction", "--format", "json", "C(3)")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["fraction"] == "3"
    code, out, _ = run(capsys, "positive-form", "7/3")
    assert code == 0 and out.startswith("C(")


def test_even_form_genus(capsys):
    code, out, _ = run(capsys, "even-form", "--format", "json", "3", "1")
    assert code == 0 and json.loads(out)["result"]["genus"] == 1


def test_det_solve(capsys):
    code, out, _ = run(capsys, "det-solve", "--format", "json", "5", "3", "--n", "1")
    r = json.loads(out)["result"]
    assert code == 0 and r["s"] == 1 and r["det"] % 5 == 3
    code, out, _ = run(capsys, "det-solve", "--format", "json", "7", "4", "--n", "2", "--signs", "-1", "-1")
    r = json.loads(out)["result"]
    assert code == 0 and r["s"] % 7 == (4 - 5) % 7


def test_det_solve_sign_count_is_usage_error(capsys):
    code, out, err = run(capsys, "det-solve", "7", "4", "--n", "2", "--signs", "1")
    assert code == 2 and out == "" and "usage:" in err


def test_realize_homology(capsys):
    code, out, _ = run(capsys, "realize-homology", "--format", "json", "15", "3", "5", "--n", "2")
    r = json.loads(out)["result"]
    assert code == 0 and r["verified"] and r["h1_mod_p"] == {"factors": [15]}


def test_invariants_trefoil(capsys):
    code, out, _ = run(capsys, "invariants", "--format", "json", "3", "1")
    r = json.loads(out)["result"]
    assert code == 0
    assert r["determinant"] == 3 and r["signature"] == -2 and r["genus"] == 1
    assert sorted(map(tuple, r["jones"])) == [(1, 1), (3, 1), (4, -1)]


def test_family_and_similar_exit_codes(capsys):
    code, out, _ = run(capsys, "family", "--format", "json", "2", "-2", "--c", "2")
    assert code == 0 and json.loads(out)["result"]["unknotting_number_one"] is True
    code, out, _ = run(capsys, "family", "--format", "json", "2", "-4", "--c", "2")
    assert code == 0 and "unknotting_number_one" not in json.loads(out)["result"]
    # w_3 family: the certificate holds through degree 2 and fails at degree 3
    assert run(capsys, "similar", "--family", "2", "-4", "2", "--c", "2", "--degree", "2")[0] == 0
    assert run(capsys, "similar", "--family", "2", "-4", "2", "--c", "2", "--degree", "3")[0] == 1
    assert run(capsys, "similar", "--family", "2", "--c", "2", "--degree", "1")[0] == 2


def test_verify_trivial(capsys):
    code, out, _ = run(capsys, "verify-trivial", "--trials", "10", "2", "-4", "2")
    assert code == 0 and "0 violations" in out


def test_census_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "census", "--format", "csv", "--max-k", "8", "--cache", str(tmp_path / "c.json"))
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "k,d_k,bound,pass"
    assert [l.split(",")[1] for l in lines[1:]] == ["2", "4", "4", "12", "12", "20", "20", "44"]


def test_json_is_deterministic(capsys, tmp_path):
    argv = ["census", "--format", "json", "--max-k", "32", "--cache", str(tmp_path / "c.json")]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    doc = json.loads(first)
    assert doc["schema_version"] == 1 and doc["command"] == "census" and doc["seed"] == 0


def test_bad_notation(capsys):
    code, out, err = run(capsys, "if-eval", "C(1,")
    assert code == 2 and out == "" and "if-eval" in err


def test_unknown_verb_and_missing_args(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "family", "2")[0] == 2
    assert run(capsys, "invariants")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ratknot", "wn", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "C(2)\n"


def test_verify_paper_reports_every_check(capsys):
    code, out, _ = run(capsys, "verify-paper", "--format", "json", "--n", "2", "--max-k", "4096")
    doc = json.loads(out)
    results = doc["result"]["results"]
    assert [r["number"] for r in results] == list(range(1, 11))
    assert "elapsed" not in json.dumps(doc)
    failed = {r["number"] for r in results if not r["passed"]}
    assert code == (1 if failed else 0)
