import pytest
from hypothesis import given
from hypothesis import strategies as st

from euclid_ramsey.grid import DOMINO, SQUARE, TRIANGLE_PREIMAGE, Configuration, GridColoring
from euclid_ramsey.gridio import (GridFormatError, format_configuration, format_grid, load_grid,
                                  parse_configuration, parse_grid, resolve_configuration, save_grid)


def test_top_line_is_highest_row():
    g = parse_grid("3 2 2\n110\n001\n")
    assert g.rows() == [[0, 0, 1], [1, 1, 0]]
    assert g[0, 1] == 1 and g[2, 0] == 1


def test_letters_for_large_colors():
    g = GridColoring(2, 1, 36, [10, 35])
    assert format_grid(g) == "2 1 36\naz\n"
    assert parse_grid("2 1 36\naz") == g


@st.composite
def grids(draw):
    w, h = draw(st.integers(1, 8)), draw(st.integers(1, 8))
    k = draw(st.integers(1, 36))
    return GridColoring(w, h, k, draw(st.lists(st.integers(0, k - 1), min_size=w * h, max_size=w * h)))


@given(grids())
def test_round_trip(g):
    text = format_grid(g)
    assert parse_grid(text) == g
    assert format_grid(parse_grid(text)) == text
    assert parse_grid(text.rstrip("\n")) == g


def test_file_round_trip_bytes(tmp_path):
    src = tmp_path / "a.txt"
    src.write_bytes(b"4 2 3\n0120\n2210\n")
    out = tmp_path / "b.txt"
    save_grid(load_grid(src), out)
    assert out.read_bytes() == src.read_bytes()


@pytest.mark.parametrize("text", [
    "",
    "2 2\n00\n00\n",
    "2 2 2\n00\n",
    "2 2 2\n000\n00\n",
    "2 2 2\n02\n00\n",
    "2 2 2\n0 \n00\n",
    "2  2 2\n00\n00\n",
    "0 1 2\n\n",
    "2 1 2\n00\n00\n",
])
def test_malformed_grids(text):
    with pytest.raises(GridFormatError):
        parse_grid(text)


def test_configuration_files(tmp_path):
    c = parse_configuration("5 5\n\n6 5\n7 6\n")
    assert c.points == ((0, 0), (1, 0), (2, 1))
    assert parse_configuration(format_configuration(c)) == c
    path = tmp_path / "c.txt"
    path.write_text("0 0\n2 0\n")
    assert resolve_configuration(str(path)) == Configuration([(0, 0), (2, 0)])
    with pytest.raises(GridFormatError):
        parse_configuration("1 2 3\n")
    with pytest.raises(GridFormatError):
        parse_configuration("a b\n")
    with pytest.raises(GridFormatError):
        parse_configuration("\n")


def test_builtins():
    assert resolve_configuration("square") == SQUARE
    assert SQUARE.points == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert resolve_configuration("domino") == DOMINO
    assert resolve_configuration("triangle-preimage") == TRIANGLE_PREIMAGE
    assert set(TRIANGLE_PREIMAGE.points) == {(0, 0), (1, 0), (0, 1)}
    with pytest.raises(GridFormatError):
        resolve_configuration("no-such-thing")
