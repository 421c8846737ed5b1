import io
import json
import subprocess
import sys

import pytest

from conecut.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def ex_file(tmp_path):
    path = tmp_path / "ex.lpt"
    path.write_text("2 2\n1 -1\n1 1\n1 2\n2 1\n")
    return str(path)


def test_solve(ex_file):
    code, text = run(["solve", ex_file, "--rule", "deepest"])
    assert code == 0
    assert "status: optimal" in text and "value: 3.5" in text and "pivots: 2" in text


def test_solve_with_skills_and_trace(ex_file, tmp_path):
    trace = tmp_path / "t.json"
    code, _ = run(["solve", ex_file, "--skills", "cut,eliminate,fall", "--trace", str(trace)])
    assert code == 0
    doc = json.loads(trace.read_text())
    assert doc["summary"]["status"] == "optimal"


def test_show_tables(ex_file):
    code, text = run(["solve", ex_file, "--show-tables"])
    assert code == 0
    assert "t-values" in text and "relative heights" in text


def test_feasible_point_flag(tmp_path):
    path = tmp_path / "p.lpt"
    path.write_text("5 6\n2 -2 1 1 0 1\n0 1 0 1 -1 1\n0 2 0 1 1 0\n1 1 1 0 1 0\n1 0 -1 0 0 1\n"
                    "4 1 4 2 6\n6 -20 1 2 -2 2\n")
    code, text = run(["solve", str(path), "--skills", "fall", "--feasible-point", "3.5,0.2,0,0.2,0"])
    assert code == 0 and "optimal-interval" in text and "value: 12" in text


def test_exit_codes(tmp_path):
    inf = tmp_path / "inf.lpt"
    inf.write_text("1 1\n-1\n1\n1\n")
    assert run(["solve", str(inf)])[0] == 2
    bad = tmp_path / "bad.lpt"
    bad.write_text("1 1\n1\n")
    assert run(["solve", str(bad)])[0] == 4
    assert run(["solve", str(tmp_path / "missing.lpt")])[0] == 4
    assert run(["solve", str(inf), "--skills", "juggle"])[0] == 4
    km = tmp_path / "km.lpt"
    run_code, text = run(["gen", "klee-minty", "4"])
    km.write_text(text)
    assert run(["solve", str(km), "--rule", "deepest", "--max-pivots", "2"])[0] == 5


def test_oracle(ex_file):
    code, text = run(["oracle", ex_file])
    assert code == 0 and "value: 3.5" in text


def test_gen():
    code, text = run(["gen", "klee-minty", "3"])
    assert code == 0
    assert text == "3 3\n1 0 0\n20 1 0\n200 20 1\n1 100 10000\n100 10 1\n"
    code, text = run(["gen", "random", "1", "2", "3"])
    assert code == 0 and text.startswith("2 3\n")
    assert run(["gen", "klee-minty", "40"])[0] == 4


def test_bench(tmp_path):
    out = tmp_path / "b.csv"
    code, text = run(["bench", "--rules", "deepest,highest", "--family", "klee-minty:3", "--out", str(out)])
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0].startswith("instance,rule,status,pivots")
    assert rows[1].split(",")[3] == "7" and rows[2].split(",")[3] == "1"
    assert "total pivots deepest: 7" in text


def test_module_entry_point(ex_file):
    proc = subprocess.run([sys.executable, "-m", "conecut", "solve", ex_file],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "value: 3.5" in proc.stdout
