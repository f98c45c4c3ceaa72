"""Colorings of the plane, coset grids and the shear map.

Every coloring is an exact oracle: it receives a :class:`PointE2` with
coordinates in Q(sqrt 3) and returns a color index.  Nothing here rounds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional

from .grid import GridColoring
from .qr3 import HALF_SQRT3, ZERO, PointE2, QR3, as_fraction, fraction_str, in_unit_square

PLANE = "plane"
UNIT_SQUARE = "unit-square"


class DomainError(ValueError):
    """A coloring was queried outside the region it is defined on."""


class NonDeterministicColoringError(RuntimeError):
    pass


class PlaneColoring:
    """Base class for color oracles on the plane or on the closed unit square."""

    colors: int = 1
    domain: str = PLANE
    family: str = "plugin"

    def color(self, p: PointE2) -> int:
        raise NotImplementedError

    def contains(self, p: PointE2) -> bool:
        return self.domain == PLANE or in_unit_square(p)

    def __call__(self, p: PointE2) -> int:
        if not self.contains(p):
            raise DomainError(f"{self.name}: sample ({p.x}, {p.y}) lies outside the {self.domain}")
        c = self.color(p)
        if not 0 <= c < self.colors:
            raise ValueError(f"{self.name} returned color {c} outside [0, {self.colors})")
        return c

    @property
    def params(self) -> dict:
        return {}

    @property
    def name(self) -> str:
        items = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}:{items}"

    def restricted(self) -> "PlaneColoring":
        """The same oracle declared only on the closed unit square."""
        return _Restricted(self)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class _Restricted(PlaneColoring):
    def __init__(self, inner: PlaneColoring):
        self.inner = inner
        self.colors = inner.colors
        self.family = inner.family
        self.domain = UNIT_SQUARE

    def color(self, p):
        return self.inner.color(p)

    @property
    def params(self):
        return {**self.inner.params, "domain": "unit"}


class ConstantColoring(PlaneColoring):
    family = "constant"

    def __init__(self, colors: int = 1, color: int = 0):
        if not 0 <= color < colors:
            raise ValueError(f"color {color} outside [0, {colors})")
        self.colors = colors
        self.value = color

    def color(self, p):
        return self.value

    @property
    def params(self):
        return {"k": str(self.colors), "c": str(self.value)}


class StripColoring(PlaneColoring):
    """Alternating vertical strips of width ``d*sqrt(3)/2``, closed on the left.

    A point is colored by the parity of ``floor((x - phase) / (d*sqrt(3)/2))``.
    """

    family = "strip"
    colors = 2

    def __init__(self, d, phase=0):
        self.d = as_fraction(d)
        if self.d <= 0:
            raise ValueError("strip parameter d must be positive")
        self.phase = QR3.coerce(phase)
        self.width = HALF_SQRT3 * self.d
        # 1 / (d*sqrt(3)/2) = (2 / (3d)) * sqrt(3)
        self._inverse_width = QR3(0, Fraction(2, 3) / self.d)

    def strip_index(self, x: QR3) -> int:
        return ((x - self.phase) * self._inverse_width).floor()

    def color(self, p):
        return self.strip_index(p.x) % 2

    @property
    def params(self):
        phase = fraction_str(self.phase.a) if self.phase.is_rational else str(self.phase)
        return {"d": fraction_str(self.d), "phase": phase}


class PeriodicColoring(PlaneColoring):
    """A grid coloring tiled over the plane with cells of size ``px x py``.

    The cell containing ``(x, y)`` is ``(floor(x/px) mod width, floor(y/py) mod height)``.
    """

    family = "periodic"

    def __init__(self, grid: GridColoring, px=1, py=1, file: Optional[str] = None):
        self.grid = grid
        self.px = as_fraction(px)
        self.py = as_fraction(py)
        if self.px <= 0 or self.py <= 0:
            raise ValueError("periods must be positive")
        self.colors = grid.colors
        self.file = file

    def color(self, p):
        i = (p.x / self.px).floor() % self.grid.width
        j = (p.y / self.py).floor() % self.grid.height
        return self.grid[i, j]

    @property
    def params(self):
        return {"file": self.file or "-", "px": fraction_str(self.px), "py": fraction_str(self.py)}


class FunctionColoring(PlaneColoring):
    """Plugin slot: wraps a user function ``PointE2 -> int``.

    The function must be deterministic; this is probed on construction by
    querying a random point set twice.
    """

    def __init__(self, fn: Callable[[PointE2], int], colors: int, family: str = "plugin",
                 domain: str = PLANE, params: Optional[dict] = None, probe: bool = True):
        if domain not in (PLANE, UNIT_SQUARE):
            raise ValueError(f"unknown domain {domain!r}")
        self.fn = fn
        self.colors = colors
        self.family = family
        self.domain = domain
        self._params = dict(params or {})
        if probe:
            probe_determinism(self)

    def color(self, p):
        return self.fn(p)

    @property
    def params(self):
        return self._params


def probe_determinism(coloring: PlaneColoring, samples: int = 64, seed: int = 0) -> None:
    """Query ``samples`` random rational points twice, in opposite orders, and demand equal answers."""
    rng = random.Random(seed)
    span = 1 if coloring.domain == UNIT_SQUARE else 16
    offset = 0 if coloring.domain == UNIT_SQUARE else -8
    pts = []
    for _ in range(samples):
        x = Fraction(rng.randrange(0, 1000 * span + 1), 1000) + offset
        y = Fraction(rng.randrange(0, 1000 * span + 1), 1000) + offset
        pts.append(PointE2(x, y))
    first = [coloring(p) for p in pts]
    # reversed so that oracles keyed on call order disagree with themselves
    second = [coloring(p) for p in reversed(pts)][::-1]
    for p, a, b in zip(pts, first, second):
        if a != b:
            raise NonDeterministicColoringError(f"{coloring.name}: point {p} colored {a} then {b}")


def strip_coloring(d, phase=0) -> StripColoring:
    return StripColoring(d, phase)


# registry -----------------------------------------------------------------

_REGISTRY: Dict[str, Callable[[dict], PlaneColoring]] = {}


def register_coloring(family: str, factory: Callable[[dict], PlaneColoring]) -> None:
    """Make ``family:key=value,...`` strings resolve through ``factory(params)``."""
    _REGISTRY[family] = factory


def _constant_factory(params):
    return ConstantColoring(int(params.get("k", "1")), int(params.get("c", "0")))


def _strip_factory(params):
    return StripColoring(as_fraction(params["d"]), as_fraction(params.get("phase", "0")))


def _periodic_factory(params):
    from .gridio import load_grid

    path = params["file"]
    grid = load_grid(path)
    return PeriodicColoring(grid, as_fraction(params.get("px", "1")), as_fraction(params.get("py", "1")),
                            file=path)


register_coloring("constant", _constant_factory)
register_coloring("strip", _strip_factory)
register_coloring("periodic", _periodic_factory)


def parse_coloring(spec: str) -> PlaneColoring:
    """Resolve a registry string such as ``strip:d=1/1,phase=0/1``.

    A trailing ``domain=unit`` restricts the coloring to the unit square.
    """
    family, _, rest = spec.partition(":")
    if family not in _REGISTRY:
        raise ValueError(f"unknown coloring family {family!r}; known: {', '.join(sorted(_REGISTRY))}")
    params = {}
    if rest:
        for item in rest.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"malformed coloring parameter {item!r} in {spec!r}")
            params[key.strip()] = value.strip()
    unit = params.pop("domain", "plane") == "unit"
    try:
        coloring = _REGISTRY[family](params)
    except KeyError as exc:
        raise ValueError(f"coloring {spec!r} is missing parameter {exc.args[0]!r}") from None
    if unit:
        coloring = coloring.restricted()
    if family not in ("constant", "strip", "periodic"):
        probe_determinism(coloring)
    return coloring


# coset grids and the shear map ----------------------------------------------

@dataclass(frozen=True)
class CosetGrid:
    """A bounded window ``base + {(i*step_x, j*step_y)}`` of a coset lattice."""

    base: PointE2
    step_x: QR3
    step_y: QR3
    extent_x: int
    extent_y: int

    def __post_init__(self):
        object.__setattr__(self, "step_x", QR3.coerce(self.step_x))
        object.__setattr__(self, "step_y", QR3.coerce(self.step_y))
        if self.step_x <= ZERO or self.step_y <= ZERO:
            raise ValueError("coset steps must be positive")
        if self.extent_x < 1 or self.extent_y < 1:
            raise ValueError("coset window extents must be positive")

    def point(self, i: int, j: int) -> PointE2:
        return PointE2(self.base.x + self.step_x * i, self.base.y + self.step_y * j)


def reduce_base(base: PointE2, step_x, step_y) -> PointE2:
    """Representative of ``base`` modulo the lattice ``step_x Z x step_y Z``."""
    sx, sy = QR3.coerce(step_x), QR3.coerce(step_y)
    if not (sx.is_rational and sy.is_rational):
        raise ValueError("lattice steps must be rational for base reduction")
    x = base.x - sx * (base.x / sx.a).floor()
    y = base.y - sy * (base.y / sy.a).floor()
    return PointE2(x, y)


def coset_grid_coloring(plane: PlaneColoring, grid: CosetGrid) -> GridColoring:
    """Color cell ``(i, j)`` by the plane color of the sample ``grid.point(i, j)``."""
    cells = []
    for j in range(grid.extent_y):
        for i in range(grid.extent_x):
            cells.append(plane(grid.point(i, j)))
    return GridColoring(grid.extent_x, grid.extent_y, plane.colors, cells)


@dataclass(frozen=True)
class ShearMap:
    """The linear map ``(1, 0) -> (r, 0)``, ``(0, 1) -> (r/2, r*sqrt(3)/2)``."""

    r: Fraction

    def __post_init__(self):
        r = as_fraction(self.r)
        if r <= 0:
            raise ValueError("shear scale r must be positive")
        object.__setattr__(self, "r", r)

    def __call__(self, u, v) -> PointE2:
        u, v = QR3.coerce(u), QR3.coerce(v)
        return PointE2((u + v / 2) * self.r, v * HALF_SQRT3 * self.r)

    def grid(self, base: PointE2, extent: int) -> "ShearedGrid":
        return ShearedGrid(self, base, extent)


@dataclass(frozen=True)
class ShearedGrid:
    """Domain lattice window ``base + {0..extent-1}^2`` seen through a shear map."""

    shear: ShearMap
    base: PointE2
    extent: int

    def point(self, i: int, j: int) -> PointE2:
        return self.shear(self.base.x + i, self.base.y + j)

    def coloring(self, plane: PlaneColoring) -> GridColoring:
        cells = [plane(self.point(i, j)) for j in range(self.extent) for i in range(self.extent)]
        return GridColoring(self.extent, self.extent, plane.colors, cells)

