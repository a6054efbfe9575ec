import csv
import json
from pathlib import Path

import jsonschema
import pytest

from smallcrn.cli import main
from smallcrn.report import analysis_report
from smallcrn import parse_network

from conftest import ACR, EMPTY, RATE_DEPENDENT, SEMICUBIC, OVERLAP, RUNNING, TUNED

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report_schema.json").read_text())


@pytest.fixture
def netfile(tmp_path):
    def make(text, name="net.crn"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def test_analyze_running_text(netfile, capsys):
    assert main(["analyze", netfile(RUNNING)]) == 0
    out = capsys.readouterr().out
    assert " -1   1" in out and "  2  -2" in out
    assert "class: Parabola" in out
    assert "\033[" not in out


def test_analyze_json(netfile, capsys):
    assert main(["analyze", netfile(RUNNING), "--json"]) == 0
    cap = capsys.readouterr()
    report = json.loads(cap.out)
    jsonschema.validate(report, SCHEMA)
    assert report["stoichiometric_matrix"] == [[-1, 1], [2, -2]]
    assert report["classification"]["class"] == "Parabola"
    assert report["pssv"]["binomial"] == {"u": [1, -2], "q": "1", "g": 1, "rate_power": 1}
    assert cap.err == ""


def test_analyze_overlap_common_monomial(netfile, capsys):
    assert main(["analyze", netfile(OVERLAP), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["common_monomial"] == [2, 1]
    assert main(["analyze", netfile(OVERLAP)]) == 0
    assert "A^2*B" in capsys.readouterr().out


def test_analyze_parse_error(netfile, capsys):
    assert main(["analyze", netfile("A -> A"), "--json"]) == 2
    cap = capsys.readouterr()
    assert cap.out == "" and "line 1" in cap.err


def test_analyze_missing_file(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.crn")]) == 2


def test_analyze_bad_rates(netfile, capsys):
    assert main(["analyze", netfile(RUNNING), "--rates", "1"]) == 2
    assert main(["analyze", netfile(RUNNING), "--rates", "1,-1"]) == 2


def test_analyze_unsupported_verify(netfile, capsys):
    path = netfile("A -> B\nB -> A\nA + B -> 0")
    assert main(["analyze", path]) == 0
    assert main(["analyze", path, "--verify"]) == 3


def test_analyze_rate_dependent_rates(netfile, capsys):
    assert main(["analyze", netfile(RATE_DEPENDENT), "--rates", "2,1,1", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, SCHEMA)
    assert report["pssv"]["status"] == "NotTwoReaction"
    assert report["classification"] is None
    assert report["oracle"]["given"]["witness"] == pytest.approx([1.0], abs=1e-9)


@pytest.mark.parametrize("text", [RUNNING, SEMICUBIC, OVERLAP, ACR, EMPTY, TUNED])
def test_report_json_round_trip(text):
    report = analysis_report(parse_network(text), rates=(1.5, 0.5), verify=True, draws=3)
    jsonschema.validate(report, SCHEMA)
    assert json.loads(json.dumps(report)) == report
    assert list(report) == list(SCHEMA["required"])


def test_acr_in_report(netfile, capsys):
    main(["analyze", netfile(ACR), "--json"])
    acr = json.loads(capsys.readouterr().out)["classification"]["acr"]
    assert acr == {"species": "A", "value": "k2/k1"}


def test_enumerate(capsys):
    assert main(["enumerate", "--max-molecularity", "2"]) == 0
    cap = capsys.readouterr()
    assert len(cap.out.splitlines()) == 210
    assert "210" in cap.err


def test_enumerate_m1(capsys):
    assert main(["enumerate", "--max-molecularity", "1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 8


def test_enumerate_invalid(capsys):
    assert main(["enumerate", "--max-molecularity", "0"]) == 2
    assert main(["enumerate", "--species", "3"]) == 2


def test_census_table_and_json(capsys):
    assert main(["census", "--max-molecularity", "2"]) == 0
    table = capsys.readouterr().out
    rows = dict(line.split() for line in table.splitlines()[1:])
    assert rows["AxisParallelLine"] == "3" and rows["LineThroughOrigin"] == "7"
    assert rows["Parabola"] == "5" and rows["Hyperbola"] == "3"
    assert main(["census", "--max-molecularity", "2", "--json"]) == 0
    counts = json.loads(capsys.readouterr().out)["counts"]
    assert counts["Parabola"] == 5 and sum(counts.values()) == 210


def test_census_m3(capsys):
    assert main(["census", "--max-molecularity", "3", "--json"]) == 0
    counts = json.loads(capsys.readouterr().out)["counts"]
    assert counts["SemicubicalParabola"] == 11 and counts["Cubic"] == 11


def _read_csv(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    return rows[0], [[float(v) for v in r] for r in rows[1:]]


def test_sample_running(netfile, tmp_path, capsys):
    out = tmp_path / "pts.csv"
    assert main(["sample", netfile(RUNNING), "--rates", "1,1", "--out", str(out)]) == 0
    header, rows = _read_csv(out)
    assert header == ["x", "y"] and len(rows) == 64
    for x, y in rows:
        assert x == pytest.approx(y * y, rel=1e-9)
    assert "residual" in capsys.readouterr().err


def test_sample_semicubic_stdout(netfile, capsys):
    assert main(["sample", netfile(SEMICUBIC), "--rates", "1,1", "--samples", "10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 11
    for line in lines[1:]:
        b, a = map(float, line.split(","))
        assert a**2 == pytest.approx(b**3, rel=1e-9)


def test_sample_empty_exit3(netfile, capsys):
    assert main(["sample", netfile(EMPTY)]) == 3


def test_verify_command(capsys):
    assert main(["verify", "--json"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["ok"] and res["networks"] == 210


def test_no_color_and_tty(netfile, capsys, monkeypatch):
    import sys

    monkeypatch.setattr(sys.stdout, "isatty", lambda: True, raising=False)
    monkeypatch.setenv("NO_COLOR", "1")
    main(["analyze", netfile(RUNNING)])
    assert "\033[" not in capsys.readouterr().out
