"""Finite colored grids and monochromatic configuration search.

Cells are addressed as ``(x, y)`` with ``x`` increasing to the right and
``y`` increasing upward; colors are ``0 .. colors-1``.  Searches work on
per-color row bitmasks: bit ``x`` of ``masks[c][y]`` is set when cell
``(x, y)`` has color ``c``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


class GridColoring:
    """An immutable ``width x height`` grid colored with ``colors`` colors."""

    __slots__ = ("width", "height", "colors", "_cells", "_masks")

    def __init__(self, width: int, height: int, colors: int, cells: Sequence[int]):
        if width < 1 or height < 1:
            raise ValueError(f"grid dimensions must be positive, got {width}x{height}")
        if colors < 1:
            raise ValueError(f"color count must be positive, got {colors}")
        cells = tuple(int(c) for c in cells)
        if len(cells) != width * height:
            raise ValueError(f"expected {width * height} cells, got {len(cells)}")
        for c in cells:
            if not 0 <= c < colors:
                raise ValueError(f"cell color {c} outside [0, {colors})")
        self.width = width
        self.height = height
        self.colors = colors
        self._cells = cells
        self._masks = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], colors: Optional[int] = None) -> "GridColoring":
        """Build from rows listed bottom row first (``rows[y][x]``)."""
        height = len(rows)
        width = len(rows[0]) if height else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        cells = [c for row in rows for c in row]
        if colors is None:
            colors = max(cells) + 1 if cells else 1
        return cls(width, height, colors, cells)

    @classmethod
    def from_masks(cls, width: int, height: int, masks: Sequence[Sequence[int]]) -> "GridColoring":
        """Build from per-color row bitmasks; the masks must partition the grid."""
        full = (1 << width) - 1
        masks = tuple(tuple(m) for m in masks)
        if any(len(rows) != height for rows in masks):
            raise ValueError(f"each color needs {height} row masks")
        for y, row in enumerate(zip(*masks)):
            acc = total = 0
            for m in row:
                acc |= m
                total += m.bit_count()
            # a cover of the row whose popcounts sum to the width is a partition
            if acc != full or total != width:
                raise ValueError(f"row {y}: color masks do not partition the row")
        colors = len(masks)
        self = cls.__new__(cls)
        self.width = width
        self.height = height
        self.colors = colors
        self._cells = None
        self._masks = masks
        return self

    @classmethod
    def constant(cls, width: int, height: int, color: int = 0, colors: Optional[int] = None) -> "GridColoring":
        return cls(width, height, colors if colors is not None else color + 1, [color] * (width * height))

    @property
    def cells(self) -> tuple:
        if self._cells is None:
            cells = [0] * (self.width * self.height)
            for c, rows in enumerate(self._masks):
                for y, m in enumerate(rows):
                    base = y * self.width
                    while m:
                        low = m & -m
                        cells[base + low.bit_length() - 1] = c
                        m ^= low
            self._cells = tuple(cells)
        return self._cells

    @property
    def row_masks(self) -> tuple:
        if self._masks is None:
            w = self.width
            masks = [[0] * self.height for _ in range(self.colors)]
            for i, c in enumerate(self._cells):
                y, x = divmod(i, w)
                masks[c][y] |= 1 << x
            self._masks = tuple(tuple(m) for m in masks)
        return self._masks

    def __getitem__(self, xy: tuple) -> int:
        x, y = xy
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise IndexError(f"cell {xy} outside {self.width}x{self.height} grid")
        return self.cells[y * self.width + x]

    def rows(self) -> list:
        w = self.width
        return [list(self.cells[y * w:(y + 1) * w]) for y in range(self.height)]

    def with_colors(self, colors: int) -> "GridColoring":
        return GridColoring(self.width, self.height, colors, self.cells)

    def __eq__(self, other):
        if not isinstance(other, GridColoring):
            return NotImplemented
        return (self.width, self.height, self.colors, self.cells) == (
            other.width, other.height, other.colors, other.cells)

    def __hash__(self):
        return hash((self.width, self.height, self.colors, self.cells))

    def __repr__(self):
        return f"GridColoring({self.width}x{self.height}, colors={self.colors})"


@dataclass(frozen=True)
class Configuration:
    """A finite set of lattice points, translated so both minima are zero."""

    points: tuple

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = {(int(p[0]), int(p[1])) for p in points}
        if not pts:
            raise ValueError("a configuration needs at least one point")
        mx = min(x for x, _ in pts)
        my = min(y for _, y in pts)
        object.__setattr__(self, "points", tuple(sorted((x - mx, y - my) for x, y in pts)))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def span_x(self) -> int:
        return max(x for x, _ in self.points)

    @property
    def span_y(self) -> int:
        return max(y for _, y in self.points)

    def mirrored(self) -> "Configuration":
        """Reflection ``x -> -x``, renormalized."""
        return Configuration((-x, y) for x, y in self.points)


SQUARE = Configuration([(0, 0), (1, 0), (0, 1), (1, 1)])
DOMINO = Configuration([(0, 0), (1, 0)])
TRIANGLE_PREIMAGE = Configuration([(0, 0), (1, 0), (0, 1)])
POINT = Configuration([(0, 0)])

BUILTIN_CONFIGURATIONS = {
    "square": SQUARE,
    "domino": DOMINO,
    "triangle-preimage": TRIANGLE_PREIMAGE,
    "point": POINT,
}


@dataclass(frozen=True)
class Homothety:
    translate_x: int
    translate_y: int
    dilation: int = 1

    def __post_init__(self):
        if self.dilation < 1:
            raise ValueError(f"dilation must be a positive integer, got {self.dilation}")

    def apply(self, config: Configuration) -> list:
        d = self.dilation
        return [(self.translate_x + d * x, self.translate_y + d * y) for x, y in config.points]


@dataclass(frozen=True)
class RectangleWitness:
    x: int
    y: int
    d1: int
    d2: int
    color: int

    @property
    def corners(self) -> list:
        x, y, d1, d2 = self.x, self.y, self.d1, self.d2
        return [(x, y), (x + d1, y), (x, y + d2), (x + d1, y + d2)]

    @property
    def is_square(self) -> bool:
        return self.d1 == self.d2


def _min_gap(mask: int):
    """Smallest ``d`` with two set bits ``d`` apart, and the lowest such left bit."""
    d = 1
    while mask >> d:
        both = mask & (mask >> d)
        if both:
            return d, (both & -both).bit_length() - 1
        d += 1
    return None


def find_mono_rectangle(coloring: GridColoring) -> Optional[RectangleWitness]:
    """First monochromatic axis-parallel rectangle, ordered by ``(d2, d1, y, x)``.

    Two rows ``y`` and ``y + d2`` span a monochromatic rectangle exactly when
    their masks for some color share at least two columns.
    """
    if coloring.width < 2:
        return None
    masks = coloring.row_masks
    h = coloring.height
    for d2 in range(1, h):
        best = None
        for y in range(h - d2):
            for color, rows in enumerate(masks):
                common = rows[y] & rows[y + d2]
                if common & (common - 1) == 0:
                    continue
                d1, x = _min_gap(common)
                if best is None or (d1, y, x) < (best[0], best[1], best[2]):
                    best = (d1, y, x, color)
            if best is not None and best[0] == 1:
                # no later row can beat a unit-width rectangle
                break
        if best is not None:
            d1, y, x, color = best
            return RectangleWitness(x, y, d1, d2, color)
    return None


def find_mono_square(coloring: GridColoring) -> Optional[RectangleWitness]:
    """First monochromatic square, ordered by ``(d, y, x)``."""
    masks = coloring.row_masks
    w, h = coloring.width, coloring.height
    for d in range(1, min(w, h)):
        for y in range(h - d):
            for color, rows in enumerate(masks):
                common = rows[y] & rows[y + d]
                hits = common & (common >> d)
                if hits:
                    x = (hits & -hits).bit_length() - 1
                    return RectangleWitness(x, y, d, d, color)
    return None


def _homothety_hits(masks, width, height, config, d, ty):
    """Bitmask of translations ``tx`` per color giving a monochromatic image."""
    pts = config.points
    for color, rows in enumerate(masks):
        acc = (1 << width) - 1
        for px, py in pts:
            acc &= rows[ty + d * py] >> (d * px)
            if not acc:
                break
        if acc:
            yield color, acc


def enumerate_witnesses(coloring: GridColoring, config: Configuration) -> Iterator[tuple]:
    """Yield every monochromatic ``(Homothety, color)`` ordered by dilation, ty, tx."""
    w, h = coloring.width, coloring.height
    sx, sy = config.span_x, config.span_y
    masks = coloring.row_masks
    d = 1
    while d * sx < w and d * sy < h:
        for ty in range(h - d * sy):
            hits = []
            for color, acc in _homothety_hits(masks, w, h, config, d, ty):
                while acc:
                    low = acc & -acc
                    hits.append((low.bit_length() - 1, color))
                    acc ^= low
            for tx, color in sorted(hits):
                yield Homothety(tx, ty, d), color
        if sx == 0 and sy == 0:
            # a single point has only one scale
            break
        d += 1


def find_homothetic_copy(coloring: GridColoring, config: Configuration) -> Optional[tuple]:
    """Canonical-first monochromatic homothetic copy of ``config``, or None."""
    return next(enumerate_witnesses(coloring, config), None)


def count_witnesses(coloring: GridColoring, config: Configuration) -> int:
    return sum(1 for _ in enumerate_witnesses(coloring, config))


# threshold reports -------------------------------------------------------

FORCED = "forced"
AVOIDABLE = "avoidable"
UNKNOWN = "unknown"

DEFAULT_EXHAUSTION_CAP = 2 ** 24


@dataclass(frozen=True)
class ThresholdVerdict:
    n: int
    status: str
    method: str
    witness: Optional[GridColoring] = None


@dataclass
class ThresholdReport:
    config: Configuration
    colors: int
    verdicts: list = field(default_factory=list)

    def status(self, n: int) -> str:
        for v in self.verdicts:
            if v.n == n:
                return v.status
        raise KeyError(n)

    @property
    def threshold(self) -> Optional[int]:
        """Least forced ``n`` in the report, if any."""
        for v in self.verdicts:
            if v.status == FORCED:
                return v.n
        return None

    def is_monotone(self) -> bool:
        forced = False
        for v in self.verdicts:
            if forced and v.status != FORCED:
                return False
            forced = forced or v.status == FORCED
        return True


def forced_threshold(config: Configuration, colors: int, max_n: int, budget: Optional[int] = None,
                     exhaustion_cap: int = DEFAULT_EXHAUSTION_CAP) -> ThresholdReport:
    """Classify ``[n] x [n]`` for ``n = 1 .. max_n`` as forced, avoidable or unknown.

    Small instances are settled by exhaustive enumeration, larger ones by the
    backtracking solver with a node ``budget`` per ``n``.  Once some ``n`` is
    forced every larger grid contains it, so later sizes are marked forced
    with method ``"monotone"`` without searching.
    """
    from .extremal import (AvoidanceInstance, BudgetExceeded, Satisfiable, count_avoiding,
                           first_avoiding, solve_avoidance)

    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    report = ThresholdReport(config, colors)
    forced_at = None
    for n in range(1, max_n + 1):
        if forced_at is not None:
            report.verdicts.append(ThresholdVerdict(n, FORCED, "monotone"))
            continue
        if len(config) == 1:
            verdict = ThresholdVerdict(n, FORCED, "exhaustive")
        elif colors ** (n * n) <= exhaustion_cap:
            if count_avoiding(n, n, colors, config, cap=exhaustion_cap) > 0:
                witness = first_avoiding(n, n, colors, config, cap=exhaustion_cap)
                verdict = ThresholdVerdict(n, AVOIDABLE, "exhaustive", witness)
            else:
                verdict = ThresholdVerdict(n, FORCED, "exhaustive")
        else:
            outcome = solve_avoidance(AvoidanceInstance(n, n, colors, config, node_budget=budget))
            if isinstance(outcome, Satisfiable):
                verdict = ThresholdVerdict(n, AVOIDABLE, "solver", outcome.coloring)
            elif isinstance(outcome, BudgetExceeded):
                verdict = ThresholdVerdict(n, UNKNOWN, "solver")
            else:
                verdict = ThresholdVerdict(n, FORCED, "solver")
        if verdict.status == FORCED:
            forced_at = n
        report.verdicts.append(verdict)
    return report
