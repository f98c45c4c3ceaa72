"""Text formats for grid colorings and lattice configurations.

Grid file::

    <width> <height> <colors>
    <top row, width characters>
    ...
    <bottom row>

Colors 0-9 are written as digits and 10-35 as ``a``-``z``.  The first row
in the file is ``y = height - 1``.
"""
from __future__ import annotations

import os
import string

from .grid import BUILTIN_CONFIGURATIONS, Configuration, GridColoring

SYMBOLS = string.digits + string.ascii_lowercase
MAX_FILE_COLORS = len(SYMBOLS)


class GridFormatError(ValueError):
    pass


def format_grid(coloring: GridColoring) -> str:
    if coloring.colors > MAX_FILE_COLORS:
        raise GridFormatError(f"grid files hold at most {MAX_FILE_COLORS} colors")
    lines = [f"{coloring.width} {coloring.height} {coloring.colors}"]
    for row in reversed(coloring.rows()):
        lines.append("".join(SYMBOLS[c] for c in row))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> GridColoring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GridFormatError("empty grid file")
    header = lines[0].split(" ")
    if len(header) != 3 or not all(tok.isdigit() for tok in header):
        raise GridFormatError(f"bad header line {lines[0]!r}")
    width, height, colors = map(int, header)
    if width < 1 or height < 1 or colors < 1:
        raise GridFormatError("dimensions and colors must be positive")
    body = lines[1:]
    if len(body) != height:
        raise GridFormatError(f"expected {height} rows, found {len(body)}")
    rows = []
    for i, line in enumerate(body):
        if len(line) != width:
            raise GridFormatError(f"row {i + 1} has {len(line)} characters, expected {width}")
        row = []
        for ch in line:
            c = SYMBOLS.find(ch)
            if c < 0 or c >= colors:
                raise GridFormatError(f"row {i + 1}: bad cell {ch!r} for {colors} colors")
            row.append(c)
        rows.append(row)
    rows.reverse()
    return GridColoring(width, height, colors, [c for row in rows for c in row])


def load_grid(path: str | os.PathLike) -> GridColoring:
    with open(path, encoding="ascii") as fh:
        return parse_grid(fh.read())


def save_grid(coloring: GridColoring, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_grid(coloring))


def parse_configuration(text: str) -> Configuration:
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GridFormatError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            points.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GridFormatError(f"line {lineno}: non-integer coordinate in {line!r}") from None
    if not points:
        raise GridFormatError("configuration file has no points")
    return Configuration(points)


def format_configuration(config: Configuration) -> str:
    return "".join(f"{x} {y}\n" for x, y in config.points)


def load_configuration(path: str | os.PathLike) -> Configuration:
    with open(path, encoding="ascii") as fh:
        return parse_configuration(fh.read())


def resolve_configuration(source: str) -> Configuration:
    """A builtin name (``square``, ``domino``, ...) or a path to a configuration file."""
    if source in BUILTIN_CONFIGURATIONS:
        return BUILTIN_CONFIGURATIONS[source]
    if os.path.exists(source):
        return load_configuration(source)
    raise GridFormatError(f"unknown configuration {source!r}; builtins: {', '.join(BUILTIN_CONFIGURATIONS)}")
