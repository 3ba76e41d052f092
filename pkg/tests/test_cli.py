import csv
import io
import json
import subprocess
import sys

from bethecount.cli import main
from bethecount.superalg import tj_closed_form


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


def test_count_examples():
    assert run_json("count", "--r", "1", "--twos", "1", "--L", "4", "--M", "2") == (0, [{"M": [2], "c": "6"}])
    assert run_json("count", "--r", "2", "--twos", "2", "--L", "2", "--M", "2,1")[1][0]["c"] == "4"
    assert run_json("count", "--r", "1", "--twos", "1", "--L", "4", "--M", "-1")[1][0]["c"] == "0"


def test_count_table_and_variants():
    code, rows = run_json("count", "--r", "1", "--twos", "2", "--L", "3")
    assert code == 0 and len(rows) == 7
    assert sum(int(r["c"]) for r in rows) == 27
    _, rows = run_json("count", "--r", "1", "--twos", "1", "--L", "3", "--impurity", "1", "--M", "1")
    assert rows[0]["c"] == "4"
    _, rows = run_json("count", "--r", "1", "--sites", "2;1", "--M", "1")
    assert rows[0]["c"] == "2"
    _, rows = run_json("count", "--super", "1,2", "--twos", "1", "--L", "4", "--M", "2,1")
    assert rows[0]["c"] == "12"


def test_mu_examples():
    assert run_json("mu", "--r", "1", "--twos", "1", "--L", "4", "--M", "2")[1][0]["mu"] == "2"
    assert run_json("mu", "--r", "2", "--twos", "2", "--L", "2", "--M", "2,1")[1][0]["mu"] == "0"
    _, rows = run_json("mu", "--super", "1,2", "--twos", "1", "--L", "4", "--M", "2,1")
    assert rows[0]["mu"] == str(tj_closed_form(4, 2, 1))
    assert rows[0]["dim"] == str(4 * (4 - 4 + 1 + 1))


def test_mu_explain_formulas():
    code, text = run("mu", "--r", "2", "--twos", "1", "--L", "3", "--M", "1,0", "--explain")
    assert code == 0
    assert text.splitlines()[0] == (
        "# mu = c(M1,M2) - c(M1-1,M2) - c(M1,M2-1) + c(M1-2,M2-1) + c(M1-1,M2-2) - c(M1-2,M2-2)")
    expected = {"a1": "c(M1,M2) - c(M1-1,M2)", "a2": "c(M1,M2) - c(M1,M2-1)",
                "a1+a2": "c(M1,M2) - c(M1-1,M2-1)"}
    for dplus, formula in expected.items():
        _, text = run("mu", "--r", "2", "--twos", "1", "--L", "3", "--dplus", dplus, "--explain")
        assert text.splitlines()[0] == f"# mu = {formula}"
    _, text = run("mu", "--r", "3", "--twos", "1", "--L", "2", "--dplus", "a1,a3", "--explain")
    assert text.splitlines()[0] == "# mu = c(M1,M2,M3) - c(M1-1,M2,M3) - c(M1,M2,M3-1) + c(M1-1,M2,M3-1)"


def test_mu_partial_table_with_charges():
    code, rows = run_json("mu", "--r", "2", "--twos", "2", "--L", "2", "--dplus", "a2", "--nonzero")
    assert code == 0 and len(rows) == 9
    assert sum(int(r["mu"]) for r in rows) == 14
    assert all(len(r["charges"]) == 1 for r in rows)
    _, rows = run_json("mu", "--r", "2", "--twos", "2", "--L", "2", "--dplus", "a2", "--M", "4,1",
                       "--charge", "0,1")
    assert rows[0]["Lambda"] == [[0], [3, 1]] and rows[0]["charges"] == [0]


def test_symmetry_examples():
    assert run("symmetry", "--r", "3", "--zeros", "t1,t3")[1].splitlines()[0] == "su(2)+su(2)+u(1)"
    assert run("symmetry", "--r", "3", "--zeros", "")[1].splitlines()[0] == "u(1)^3"
    assert run("symmetry", "--r", "2", "--zeros", "t1,t2")[1].splitlines()[0] == "su(3)"
    _, rows = run_json("symmetry", "--r", "5", "--dplus", "a2+a3,a4")
    assert rows[0]["blocks"] == [[1], [2, 4, 5], [3], [6]]


def test_check_examples():
    code, rows = run_json("check", "--r", "2", "--twos", "1", "--L", "4", "--dplus", "a2")
    assert code == 0 and rows[0]["total"] == "81" and rows[0]["pass"] is True
    assert run_json("check", "--r", "2", "--twos", "2", "--L", "2")[1][0]["total"] == "36"
    assert run_json("check", "--super", "1,1", "--twos", "1", "--L", "6")[1][0]["total"] == "64"
    code, rows = run_json("check", "--r", "2", "--twos", "1", "--L", "3", "--impurity", "2")
    assert code == 0 and rows[0]["total"] == str(6 * 27)


def test_check_failure_exit_code():
    code, _ = run("check", "--super", "1,1", "--twos", "2", "--L", "3")
    assert code == 1


def test_input_errors_exit_2(capsys):
    assert run("count", "--r", "2", "--twos", "1", "--L", "3", "--M", "1")[0] == 2
    assert run("mu", "--r", "2", "--L", "3", "--dplus", "a1", "--zeros", "t1")[0] == 2
    assert run("symmetry", "--r", "3", "--zeros", "t1+t3")[0] == 2
    assert run("count", "--r", "1", "--M", "x")[0] == 2
    assert run("mu", "--super", "2,2", "--M", "1,1,1")[0] == 2
    assert run("count", "--r", "0")[0] == 2
    assert run("bogus")[0] == 2
    assert "error" in capsys.readouterr().err


def test_guard_exit_3(monkeypatch, capsys):
    from bethecount import occupancy
    monkeypatch.setattr(occupancy, "BRUTE_FORCE_LIMIT", 1)
    code, _ = run("verify", "--max-L", "2")
    assert code == 3
    assert "resource guard" in capsys.readouterr().err


def test_formats_agree():
    argv = ["mu", "--r", "2", "--twos", "1", "--L", "3"]
    _, rows = run_json(*argv)
    _, text = run(*argv, "--format", "csv")
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert [r["mu"] for r in parsed] == [r["mu"] for r in rows]
    assert [r["M"] for r in parsed] == [",".join(map(str, r["M"])) for r in rows]
    _, human = run(*argv)
    assert len(human.splitlines()) == len(rows) + 1


def test_json_round_trip_reproduces_totals():
    _, rows = run_json("mu", "--r", "3", "--twos", "1", "--L", "4")
    assert sum(int(r["mu"]) * int(r["dim"]) for r in rows) == 4**4
    _, rows = run_json("count", "--r", "2", "--twos", "2", "--L", "3")
    assert sum(int(r["c"]) for r in rows) == 6**3


def test_output_is_deterministic(monkeypatch):
    argv = ["mu", "--r", "2", "--twos", "2", "--L", "4", "--format", "json"]
    first = run(*argv)[1]
    monkeypatch.setenv("BETHECOUNT_THREADS", "4")
    assert run(*argv)[1] == first
    assert run(*argv)[1] == first


def test_large_integers_are_strings():
    _, rows = run_json("count", "--r", "1", "--twos", "1", "--L", "80", "--M", "40")
    assert isinstance(rows[0]["c"], str)
    assert int(rows[0]["c"]) > 2**64


def test_verify_reduced_and_negative_control():
    code, rows = run_json("verify", "--max-L", "3")
    assert code == 0 and len(rows) == 3 and all(r["pass"] for r in rows)
    code, rows = run_json("verify", "--max-L", "2", "--perturb")
    assert code == 1
    assert rows[0]["pass"] is False


def test_console_script_module_entry():
    proc = subprocess.run([sys.executable, "-m", "bethecount.cli", "count", "--r", "1", "--twos", "1",
                           "--L", "4", "--M", "2", "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "M,c\n2,6\n"
