import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from euclid_ramsey.cli import main
from euclid_ramsey.extremal import verify_avoidance
from euclid_ramsey.grid import SQUARE
from euclid_ramsey.gridio import load_grid, parse_grid
from euclid_ramsey.plane import parse_coloring
from euclid_ramsey.qr3 import QR3
from euclid_ramsey.witnesses import PlaneWitness, verify_witness


@pytest.fixture
def board(tmp_path):
    path = tmp_path / "board.txt"
    path.write_text("2 2 2\n01\n10\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_12(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run(capsys, "solve", "--width", "12", "--height", "12", "--colors", "2", "--target", "square",
                     "--out", str(out))
    assert code == 0
    assert verify_avoidance(load_grid(out), SQUARE)


def test_solve_unsat_and_budget(capsys):
    code, _, err = run(capsys, "solve", "--width", "3", "--height", "3", "--target", "domino")
    assert code == 1 and "unsat" in err
    code, _, err = run(capsys, "solve", "--width", "12", "--height", "12", "--budget", "5", "--verbose")
    assert code == 1 and "outcome=budget-exceeded" in err


def test_solve_trivial_target_is_usage_error(capsys):
    path_code, _, err = run(capsys, "solve", "--width", "2", "--height", "2", "--target", "point")
    assert path_code == 2 and "one-point" in err


def test_triangle_unit_square_json(capsys):
    code, out, _ = run(capsys, "plane-witness", "--construction", "triangle-unit-square",
                       "--coloring", "constant:k=2,c=0", "--r", "2/45")
    assert code == 0
    obj = json.loads(out)
    w = PlaneWitness.from_json(obj)
    assert w.side == QR3(Fraction(2, 45)) and w.multiple == 1
    assert verify_witness(w)


def test_r_out_of_range_names_bound(capsys):
    code, _, err = run(capsys, "plane-witness", "--construction", "triangle-unit-square",
                       "--coloring", "constant:k=2,c=0", "--r", "1/10")
    assert code == 2 and "2/45" in err


def test_decimal_r_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["plane-witness", "--construction", "triangle", "--coloring", "constant:k=2,c=0", "--r", "0.5"])
    assert exc.value.code == 2


def test_grid_search_checkerboard_not_found(board, capsys):
    code, out, _ = run(capsys, "grid-search", "--in", board, "--shape", "rectangle")
    assert code == 1
    assert json.loads(out) == {"witnesses": []}


def test_grid_search_found(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("3 2 2\n101\n101\n")
    code, out, _ = run(capsys, "grid-search", "--in", str(path))
    assert code == 0
    assert json.loads(out)["witnesses"] == [{"x": 0, "y": 0, "d1": 2, "d2": 1, "color": 1}]
    code, out, _ = run(capsys, "grid-search", "--in", str(path), "--shape", "config", "--config", "domino",
                       "--format", "text")
    assert code == 0 and out == "translate_x=0 translate_y=0 dilation=2 color=1\n"


def test_grid_enumerate(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("3 3 1\n000\n000\n000\n")
    code, out, _ = run(capsys, "grid-enumerate", "--in", str(path), "--config", "point")
    assert code == 0 and json.loads(out)["count"] == 9


def test_malformed_grid_and_missing_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2 2\n012\n")
    assert run(capsys, "grid-search", "--in", str(bad))[0] == 2
    assert run(capsys, "grid-search", "--in", str(tmp_path / "missing.txt"))[0] == 2


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "plane-witness", "--construction", "rectangle", "--r", "1",
                       "--coloring", "constant:k=2,c=0,domain=unit", "--window", "3")
    assert code == 2 and "outside" in err


def test_not_found_within_window(capsys):
    code, out, err = run(capsys, "plane-witness", "--construction", "triangle", "--r", "1",
                         "--coloring", "strip:d=1/1,phase=0/1", "--window", "2")
    assert code == 1 and json.loads(out) == {"witnesses": []} and "window" in err


def test_threshold_report(capsys):
    code, out, _ = run(capsys, "threshold", "--target", "domino", "--max-n", "4")
    obj = json.loads(out)
    assert code == 0
    assert [v["status"] for v in obj["verdicts"]] == ["avoidable", "avoidable", "forced", "forced"]
    assert parse_grid(obj["verdicts"][1]["witness"]).width == 2


def test_render_checkerboard(board, tmp_path, capsys):
    out = tmp_path / "b.svg"
    assert run(capsys, "render", "--in", board, "--out", str(out))[0] == 0
    svg = out.read_text()
    rects = re.findall(r'<rect class="(c\d+)"', svg)
    assert len(rects) == 4 and set(rects) == {"c0", "c1"}
    assert "exact" in svg


def test_render_witness_vertices_match_json(tmp_path, capsys):
    wpath = tmp_path / "w.json"
    assert run(capsys, "plane-witness", "--construction", "triangle", "--coloring", "strip:d=1/1,phase=0/1",
               "--r", "1/3", "--window", "30", "--out", str(wpath))[0] == 0
    svg_path = tmp_path / "w.svg"
    assert run(capsys, "render", "--in", str(wpath), "--out", str(svg_path))[0] == 0
    svg = svg_path.read_text()
    w = PlaneWitness.from_json(json.loads(wpath.read_text()))
    marks = re.findall(r'<circle class="vertex"[^>]*data-x="([^"]+)" data-y="([^"]+)"', svg)
    assert marks == [(v.x.format(12), v.y.format(12)) for v in w.vertices]
    assert len(marks) == 3
    assert "approximate raster" in svg
    assert verify_witness(w, parse_coloring(w.coloring))


def test_outputs_are_byte_identical(board, tmp_path, capsys):
    texts = []
    for i in range(3):
        svg, wit, sol = tmp_path / f"r{i}.svg", tmp_path / f"w{i}.json", tmp_path / f"s{i}.txt"
        run(capsys, "grid-search", "--in", board, "--format", "svg", "--out", str(svg))
        run(capsys, "plane-witness", "--construction", "rectangle", "--coloring", "strip:d=1/1,phase=0/1",
            "--r", "1/2", "--format", "svg", "--out", str(wit))
        run(capsys, "solve", "--width", "9", "--height", "9", "--out", str(sol))
        texts.append((svg.read_bytes(), wit.read_bytes(), sol.read_bytes()))
    assert texts[0] == texts[1] == texts[2]


def test_module_entry_point(board):
    proc = subprocess.run([sys.executable, "-m", "euclid_ramsey", "grid-search", "--in", board],
                          capture_output=True, text=True)
    assert proc.returncode == 1
