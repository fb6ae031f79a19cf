from __future__ import annotations

import csv
import json

import pytest

from blaschkelab.cli import main


def _write_spec(tmp_path, name, theta, zeros):
    path = tmp_path / name
    path.write_text(json.dumps({"theta": theta, "zeros": zeros}))
    return path


@pytest.fixture()
def square_spec(tmp_path):
    return _write_spec(tmp_path, "square.json", 0.0, [[0.0, 0.0], [0.0, 0.0]])


@pytest.fixture()
def order3_spec(tmp_path):
    return _write_spec(
        tmp_path, "order3.json", 0.0, [[0.0, 0.0], [0.0, 0.0], [0.5, 0.0]]
    )


def test_analyze_square(tmp_path, square_spec):
    out = tmp_path / "report.json"
    code = main(["analyze", str(square_spec), "--report", str(out), "--seed", "3"])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["schema"] == "1"
    assert report["order"] == 2
    assert report["q_orbitals"] == 2
    assert report["commutant_dim"] == 2
    assert report["commutative"]
    assert report["num_minimal_projections"] == 2
    assert report["generators"] == [[1, 0]]
    assert report["ok"]
    assert all(report["theorem_checks"].values())


def test_analyze_single_zero(tmp_path):
    spec = _write_spec(tmp_path, "mobius.json", 0.0, [[0.3, 0.0]])
    out = tmp_path / "report.json"
    assert main(["analyze", str(spec), "--report", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["order"] == 1
    assert report["q_orbitals"] == 1
    assert report["commutant_dim"] == 1
    assert report["generators"] == []
    assert report["ok"]


def test_analyze_stdout(square_spec, capsys):
    assert main(["analyze", str(square_spec)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 2


def test_usage_errors_exit_2(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["analyze", str(bad)]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_numerical_failure_exit_3(square_spec, capsys):
    code = main(["analyze", str(square_spec), "--newton-tol", "1e-30"])
    captured = capsys.readouterr()
    assert code == 3
    assert "blaschkelab." in captured.err


def test_verify_gamma(square_spec, capsys):
    code = main(
        ["verify-gamma", str(square_spec), "--budget", "20000", "--samples", "50"]
    )
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["intertwining_residual"] < 1e-9
    assert report["isometry_error"] < 1e-2
    assert report["budget"] == 20000


def test_trace_loop_csv(tmp_path, square_spec):
    out = tmp_path / "trace.csv"
    code = main(
        ["trace-loop", str(square_spec), "--index", "0", "--out", str(out)]
    )
    assert code == 0
    with out.open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["t", "re_w", "im_w", "re_z1", "im_z1", "re_z2", "im_z2"]
    data = [[float(x) for x in row] for row in rows[1:]]
    assert len(data) >= 3
    first, last = data[0], data[-1]
    assert first[0] == 0.0 and last[0] == 1.0
    assert first[1] == pytest.approx(last[1], abs=1e-12)
    assert first[2] == pytest.approx(last[2], abs=1e-12)
    assert last[3] == pytest.approx(first[5], abs=1e-8)
    assert last[4] == pytest.approx(first[6], abs=1e-8)
    assert last[5] == pytest.approx(first[3], abs=1e-8)
    assert last[6] == pytest.approx(first[4], abs=1e-8)


def test_trace_loop_bad_index(square_spec, capsys):
    assert main(["trace-loop", str(square_spec), "--index", "5"]) == 2
    capsys.readouterr()


def test_zn_subcommand(capsys):
    assert main(["zn", "--n", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["n"] == 2
    assert report["ok"]
    assert main(["zn", "--n", "1"]) == 0
    capsys.readouterr()


def test_reports_byte_identical(tmp_path, order3_spec):
    outputs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        code = main(
            ["analyze", str(order3_spec), "--report", str(out), "--seed", "7"]
        )
        assert code == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
