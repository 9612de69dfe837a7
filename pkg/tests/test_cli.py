import csv
import io
import json

import pytest

from fqcurves.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ideal_verify(capsys):
    code, out, _ = run(capsys, "ideal", "verify", "-n", "2", "-k", "1", "--field", "2", "--dmax", "6")
    assert code == 0 and out.strip().endswith("PASS")
    code, out, _ = run(capsys, "ideal", "verify", "-n", "3", "-k", "2", "--field", "3", "--dmax", "7", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert list(data)[:5] == ["n", "k", "q", "locus_size", "per_degree"]


def test_bad_input_exit_1(capsys):
    assert run(capsys, "ideal", "verify", "-n", "2", "-k", "0", "--field", "2")[0] == 1
    assert run(capsys, "field", "--field", "6")[0] == 1
    assert run(capsys, "curve", "count", "--field", "2", "--poly", "X^2+Y")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "field", "--field", "2", "--jobs", "0")[0] == 1


def test_io_error_exit_3(capsys, tmp_path):
    assert run(capsys, "figure", "--field", "5", "--dmax", "12", "-o", str(tmp_path / "no" / "x.csv"))[0] == 3


def test_figure_csv_file(capsys, tmp_path):
    path = tmp_path / "fig.csv"
    assert run(capsys, "figure", "--field", "5", "--dmax", "12", "--format", "csv", "-o", str(path))[0] == 0
    rows = list(csv.reader(io.StringIO(path.read_bytes().decode("utf-8"))))
    assert rows[0] == ["d", "N", "status"]
    assert ["12", "30", "attained-second"] in rows


def test_curve_commands(capsys):
    quartic = "(X+Y+Z)^4 + (X*Y+Y*Z+Z*X)^2 + X*Y*Z*(X+Y+Z)"
    code, out, _ = run(capsys, "curve", "sziklai", "--field", "2^2", "--poly", quartic)
    assert code == 0 and "exception-curve" in out
    code, out, _ = run(capsys, "curve", "count", "--field", "4", "--poly", quartic, "--format", "json")
    assert json.loads(out)["N"] == 14
    code, out, _ = run(capsys, "curve", "lines", "--field", "3", "--poly", "X*Y*Z", "--format", "json")
    assert len(json.loads(out)["line_components"]) == 3
    code, out, _ = run(capsys, "curve", "singular", "--field", "3", "--poly", "X^4+Y^4 - X*Z^3 - Y*Z^3 + X*Y*Z^2 - X^3*Z", "--ext", "2")
    assert code == 0


def test_curve_report_roundtrip(capsys):
    code, out, _ = run(capsys, "curve", "report", "--field", "3", "--poly", "X^2+Y*Z", "--format", "json")
    data = json.loads(out)
    from fqcurves.curves import CurveReport

    assert CurveReport.from_json(data).to_json() == data


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "fc", "--field", "5", "--degree", "7", "--search-c", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["report"]["N"] == 28 and data["report"]["line_components"] == []
    code, out, _ = run(capsys, "construct", "remark", "--field", "4", "--degree", "8", "--search-c")
    assert code == 0 and "N_q(C) = 20" in out
    code, out, _ = run(capsys, "construct", "qplus1", "--field", "3", "--matrix", "1,0,0,0,1,0")
    assert code == 0 and "N_q(C) = 9" in out
    assert run(capsys, "construct", "qplus1", "--field", "3", "--matrix", "1,0,0,0,2,0")[0] == 1
    assert run(capsys, "construct", "fc", "--field", "5", "--degree", "4")[0] == 1


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--field", "2", "--degree", "3", "--filter", "line-free", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["M"] == 5 and data["M2"] == 4
    parts = []
    for i in range(3):
        _, out, _ = run(capsys, "search", "--field", "2", "--degree", "3", "--parts", "3", "--part", str(i), "--format", "json")
        parts.append(json.loads(out))
    assert sum(p["scanned"] for p in parts) == 1023
    assert run(capsys, "search", "--field", "2", "--degree", "3", "--parts", "3")[0] == 1


def test_search_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("FQC_BUDGET", "10")
    assert run(capsys, "search", "--field", "2", "--degree", "3")[0] == 1


def test_main_theorem(capsys):
    code, out, _ = run(capsys, "main-theorem", "--field", "4")
    assert code == 0
    assert "N=16" in out and "N=19" in out and "N=20" in out
    code, out, _ = run(capsys, "main-theorem", "--field", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [c["passed"] for c in data["checks"]] == [True] * 6


def test_main_theorem_q2(capsys):
    code, out, _ = run(capsys, "main-theorem", "--field", "2", "--format", "json")
    checks = {c["name"]: c for c in json.loads(out)["checks"]}
    assert checks["census d=3"]["detail"]["M2"] == 4
    assert checks["census d=5"]["detail"]["M"] == 7
    assert code == 0


def test_mindegree(capsys):
    code, out, _ = run(capsys, "mindegree", "-n", "2", "--field", "2")
    assert code == 0 and "threshold (q-1)n+1 = 3" in out


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--field", "4", "--format", "json")
    assert json.loads(out)["elements"] == ["0", "1", "t", "1+t"]
