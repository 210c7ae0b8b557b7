"""Command-line interface: subcommands, exit codes, determinism."""

import json

import pytest

from polytorus.cli import main
from polytorus.knots import format_stick_knot, triangle_unknot


@pytest.fixture()
def tri_file(tmp_path):
    p = tmp_path / "triangle.txt"
    p.write_text(format_stick_knot(triangle_unknot()))
    return str(p)


def test_generate_then_analyze(tmp_path, capsys):
    cpath = tmp_path / "m5.txt"
    assert main(["generate", "minimal3k", "--k", "5", "-o", str(cpath)]) == 0
    assert main(["analyze", str(cpath)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["type"] == "3x5"
    assert report["n"] == 13
    assert report["schema"] == 1
    assert report["bound_satisfied"]


def test_census_n7(capsys):
    assert main(["census", "--n", "7"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    summary = json.loads(out[-1])
    assert summary["count"] == 1
    assert summary["by_type"] == {"3x3": 1}
    assert len(out) == 2  # one canonical face line + summary


def test_census_deterministic(capsys):
    main(["census", "--n", "8"])
    first = capsys.readouterr().out
    main(["census", "--n", "8"])
    second = capsys.readouterr().out
    assert first == second


def test_knot_det(tri_file, capsys):
    assert main(["knot", "det", "--knot", tri_file]) == 0
    assert json.loads(capsys.readouterr().out)["determinant"] == 1


def test_realize_tube(tri_file, tmp_path, capsys):
    out = tmp_path / "tube.off"
    code = main(["realize", "tube", "--knot", tri_file, "-o", str(out)])
    cert = json.loads(capsys.readouterr().out)
    assert code == 0
    assert cert["embedded"] is True
    assert cert["determinant"] == 1
    assert cert["vertices"] == 9
    assert out.read_text().splitlines()[1] == "9 18 0"


def test_realize_cyclic(capsys):
    assert main(["realize", "cyclic", "--k", "3"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["vertices"] == 7 and cert["embedded"]


def test_usage_error_exit_2(tri_file):
    with pytest.raises(SystemExit) as exc:
        main(["census"])  # missing --n
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["realize", "tube"])  # missing --knot
    assert exc.value.code == 2


def test_missing_file_exit_1(capsys):
    assert main(["analyze", "/nonexistent/file.txt"]) == 1


def test_bad_knot_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("0 0 0\n1 0 0\n2 0 0\n0 1 0\n")  # collinear
    assert main(["knot", "det", "--knot", str(p)]) == 1
