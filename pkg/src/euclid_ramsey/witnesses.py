"""Monochromatic figures in colorings of the plane, found through coset grids.

Each constructor samples a finite window of a coset lattice, runs a grid
search on the induced coloring and maps the grid witness back to exact
plane points.  ``None`` always means *not found within the window*; the
underlying existence results give no bound on where a witness appears.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .grid import Configuration, find_homothetic_copy, find_mono_rectangle, find_mono_square
from .plane import CosetGrid, PlaneColoring, ShearMap, coset_grid_coloring, parse_coloring, reduce_base
from .qr3 import HALF_SQRT3, PointE2, QR3, as_fraction, fraction_str, in_unit_square, squared_distance

RECTANGLE = "rectangle"
TRIANGLE = "triangle"
HOMOTHETIC = "homothetic-copy"

MAX_TRIANGLE_R = Fraction(2, 45)
SQUARE_FORCING_SIZE = 15


class InconsistencyError(RuntimeError):
    """A construction that must succeed did not; the coloring oracle is suspect."""


@dataclass(frozen=True)
class PlaneWitness:
    kind: str
    vertices: tuple
    color: int
    r: Fraction
    multiple: int
    source: dict = field(default_factory=dict)
    coloring: str = ""

    @property
    def construction(self) -> str:
        return self.source.get("construction", self.kind)

    @property
    def side(self) -> QR3:
        """Triangle side length ``r * multiple``."""
        if self.kind != TRIANGLE:
            raise AttributeError("only triangle witnesses have a single side length")
        return QR3(self.r * self.multiple)

    @property
    def sides(self) -> tuple:
        """``(width, height)`` of a rectangle witness."""
        if self.kind != RECTANGLE:
            raise AttributeError("only rectangle witnesses have width and height")
        v0, v1, v2, _ = self.vertices
        return v1.x - v0.x, v2.y - v0.y

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "color": self.color,
            "vertices": [v.to_json() for v in self.vertices],
            "r": fraction_str(self.r),
            "multiple": self.multiple,
            "source": _encode(self.source),
            "coloring": {"name": self.coloring, "params": _coloring_params(self.coloring)},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, obj: dict) -> "PlaneWitness":
        return cls(
            kind=obj["kind"],
            vertices=tuple(PointE2.from_json(v) for v in obj["vertices"]),
            color=int(obj["color"]),
            r=as_fraction(obj["r"]),
            multiple=int(obj["multiple"]),
            source=_decode(obj.get("source", {})),
            coloring=obj.get("coloring", {}).get("name", ""),
        )


def _coloring_params(name: str) -> dict:
    _, _, rest = name.partition(":")
    return dict(item.split("=", 1) for item in rest.split(",") if "=" in item)


def _encode(value):
    if isinstance(value, QR3):
        return value.to_json()
    if isinstance(value, PointE2):
        return value.to_json()
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


_POINT_KEYS = {"base"}
_QR3_KEYS = {"step_x", "step_y"}


def _decode(source: dict) -> dict:
    out = {}
    for key, value in source.items():
        if key in _POINT_KEYS:
            out[key] = PointE2.from_json(value)
        elif key in _QR3_KEYS:
            out[key] = QR3.from_json(value)
        elif key == "config":
            out[key] = [tuple(p) for p in value]
        else:
            out[key] = value
    return out


def default_window(plane: PlaneColoring) -> int:
    return SQUARE_FORCING_SIZE if plane.colors <= 2 else 64


def _positive(r, what="r") -> Fraction:
    r = as_fraction(r)
    if r <= 0:
        raise ValueError(f"{what} must be positive, got {r}")
    return r


def _rectangle_from_grid(plane, grid, hit, construction, r, multiple) -> PlaneWitness:
    x, y, d1, d2 = hit.x, hit.y, hit.d1, hit.d2
    vertices = (grid.point(x, y), grid.point(x + d1, y), grid.point(x, y + d2), grid.point(x + d1, y + d2))
    source = {"construction": construction, "base": grid.base, "step_x": grid.step_x, "step_y": grid.step_y,
              "x": x, "y": y, "d1": d1, "d2": d2}
    return PlaneWitness(RECTANGLE, vertices, hit.color, r, multiple, source, plane.name)


def rectangle_witness(plane: PlaneColoring, r, base: PointE2 = PointE2(0, 0),
                      window: Optional[int] = None) -> Optional[PlaneWitness]:
    """Monochromatic rectangle with sides ``d1*r`` and ``d2*r`` in the coset ``base + rZ x rZ``.

    ``multiple`` records ``d1``; ``d2`` is kept in ``source``.
    """
    r = _positive(r)
    window = window or default_window(plane)
    grid = CosetGrid(reduce_base(base, r, r), QR3(r), QR3(r), window, window)
    hit = find_mono_rectangle(coset_grid_coloring(plane, grid))
    if hit is None:
        return None
    return _rectangle_from_grid(plane, grid, hit, "rectangle", r, hit.d1)


def aspect_ratio_witness(plane: PlaneColoring, r, base: PointE2 = PointE2(0, 0),
                         window: Optional[int] = None) -> Optional[PlaneWitness]:
    """Monochromatic rectangle of width ``r*d`` and height ``d`` from a square in ``base + rZ x Z``."""
    r = _positive(r)
    window = window or default_window(plane)
    grid = CosetGrid(reduce_base(base, r, 1), QR3(r), QR3(1), window, window)
    hit = find_mono_square(coset_grid_coloring(plane, grid))
    if hit is None:
        return None
    return _rectangle_from_grid(plane, grid, hit, "aspect-ratio", r, hit.d1)


def unit_square_aspect_witness(plane: PlaneColoring, r, base: PointE2 = PointE2(0, 0)) -> Optional[PlaneWitness]:
    """Aspect-ratio-``r`` rectangle inside the unit square from a 15 x 15 coset grid.

    The grid is ``base + (r*A) x A`` with ``A = {0, 1/15, ..., 14/15}``.  Every
    2-coloring of a 15 x 15 grid has a monochromatic square, so for two colors
    a miss raises :class:`InconsistencyError`.  With more colors a miss
    returns None.
    """
    r = as_fraction(r)
    if not 0 < r < 1:
        raise ValueError(f"aspect ratio r must lie in (0, 1), got {r}")
    n = SQUARE_FORCING_SIZE
    step_x, step_y = r / n, Fraction(1, n)
    grid = CosetGrid(reduce_base(base, step_x, step_y), QR3(step_x), QR3(step_y), n, n)
    hit = find_mono_square(coset_grid_coloring(plane, grid))
    if hit is None:
        if plane.colors <= 2:
            raise InconsistencyError(
                f"{plane.name}: 15x15 coset grid at {grid.base} has no monochromatic square")
        return None
    return _rectangle_from_grid(plane, grid, hit, "unit-square-aspect", r, hit.d1)


def _triangle(plane, shear, base, extent, construction):
    lattice = shear.grid(base, extent)
    hit = find_mono_square(lattice.coloring(plane))
    if hit is None:
        return None
    x, y, d = hit.x, hit.y, hit.d1
    # lower-left, lower-right and upper-left corners: the 60-degree half of the rhombus
    vertices = (lattice.point(x, y), lattice.point(x + d, y), lattice.point(x, y + d))
    source = {"construction": construction, "base": base, "x": x, "y": y, "d": d}
    return PlaneWitness(TRIANGLE, vertices, hit.color, shear.r, d, source, plane.name)


def triangle_witness(plane: PlaneColoring, r, base: PointE2 = PointE2(0, 0),
                     window: Optional[int] = None) -> Optional[PlaneWitness]:
    """Monochromatic equilateral triangle homothetic to the unit triangle, side ``r*d``.

    The domain lattice ``base + Z^2`` is colored through the shear map, a
    monochromatic square of side ``d`` is found, and its image rhombus
    supplies the triangle.
    """
    shear = ShearMap(_positive(r))
    window = window or default_window(plane)
    return _triangle(plane, shear, reduce_base(base, 1, 1), window, "triangle")


def unit_square_triangle_witness(plane: PlaneColoring, r, base: PointE2 = PointE2(0, 0)) -> Optional[PlaneWitness]:
    """Triangle witness inside the unit square for ``0 < r <= 2/45``.

    The shear image of ``[0, 15]^2`` fits in the unit square exactly when
    ``r <= 2/45``, so the 15 x 15 domain grid is always sampled inside it.
    """
    r = as_fraction(r)
    if not 0 < r <= MAX_TRIANGLE_R:
        raise ValueError(f"r must lie in (0, 2/45] for the unit-square triangle construction, got {r}")
    n = SQUARE_FORCING_SIZE
    wit = _triangle(plane, ShearMap(r), reduce_base(base, 1, 1), n, "unit-square-triangle")
    if wit is None:
        if plane.colors <= 2:
            raise InconsistencyError(f"{plane.name}: sheared 15x15 grid has no monochromatic square")
        return None
    if not all(in_unit_square(v) for v in wit.vertices):
        raise InconsistencyError("triangle vertex left the unit square")
    return wit


def homothetic_witness(plane: PlaneColoring, config: Configuration, base: PointE2 = PointE2(0, 0),
                       window: Optional[int] = None) -> Optional[PlaneWitness]:
    """Monochromatic homothetic copy of ``config`` in the coset ``base + Z x Z``."""
    window = window or default_window(plane)
    grid = CosetGrid(reduce_base(base, 1, 1), QR3(1), QR3(1), window, window)
    hit = find_homothetic_copy(coset_grid_coloring(plane, grid), config)
    if hit is None:
        return None
    hom, color = hit
    vertices = tuple(grid.point(x, y) for x, y in hom.apply(config))
    source = {"construction": "homothetic", "base": grid.base, "config": list(config.points),
              "translate_x": hom.translate_x, "translate_y": hom.translate_y, "dilation": hom.dilation}
    return PlaneWitness(HOMOTHETIC, vertices, color, Fraction(1), hom.dilation, source, plane.name)


CONSTRUCTIONS = {
    "rectangle": rectangle_witness,
    "aspect-ratio": aspect_ratio_witness,
    "aspect-unit-square": unit_square_aspect_witness,
    "triangle": triangle_witness,
    "triangle-unit-square": unit_square_triangle_witness,
}


@dataclass(frozen=True)
class ParameterResult:
    r: Fraction
    witness: Optional[PlaneWitness]
    error: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def size(self):
        """Side length of a triangle, ``(width, height)`` of a rectangle, else None."""
        w = self.witness
        if w is None:
            return None
        if w.kind == TRIANGLE:
            return w.side
        if w.kind == RECTANGLE:
            return w.sides
        return None


def parametric_witnesses(plane: PlaneColoring, construction: Union[str, Callable], params: Sequence,
                         **kwargs) -> list:
    """Run one construction for each scale in ``params``; failures stay per-parameter."""
    build = CONSTRUCTIONS[construction] if isinstance(construction, str) else construction
    rs = [as_fraction(r) for r in params]
    if len(set(rs)) != len(rs):
        raise ValueError("parameters must be distinct")
    out = []
    for r in rs:
        try:
            out.append(ParameterResult(r, build(plane, r, **kwargs)))
        except (ValueError, InconsistencyError) as exc:
            out.append(ParameterResult(r, None, str(exc)))
    return out


# verification ------------------------------------------------------------

def recolor_ok(witness: PlaneWitness, plane: PlaneColoring) -> bool:
    return all(plane(v) == witness.color for v in witness.vertices)


def geometry_ok(witness: PlaneWitness) -> bool:
    """Exact shape check for the witness kind."""
    v = witness.vertices
    src = witness.source
    if witness.kind == RECTANGLE:
        if len(v) != 4:
            return False
        width, height = v[1].x - v[0].x, v[2].y - v[0].y
        if not (v[1].y == v[0].y and v[2].x == v[0].x and v[3] == PointE2(v[1].x, v[2].y)):
            return False
        if width <= 0 or height <= 0:
            return False
        if "step_x" in src and (width != src["step_x"] * src["d1"] or height != src["step_y"] * src["d2"]):
            return False
        if witness.construction in ("aspect-ratio", "unit-square-aspect"):
            return width == height * witness.r
        return True
    if witness.kind == TRIANGLE:
        if len(v) != 3:
            return False
        s = QR3(witness.r * witness.multiple)
        if v[1] - v[0] != PointE2(s, 0) or v[2] - v[0] != PointE2(s / 2, HALF_SQRT3 * s):
            return False
        d2 = s * s
        return (squared_distance(v[0], v[1]) == d2 and squared_distance(v[0], v[2]) == d2
                and squared_distance(v[1], v[2]) == d2)
    if witness.kind == HOMOTHETIC:
        base, d = src["base"], src["dilation"]
        tx, ty = src["translate_x"], src["translate_y"]
        expected = [PointE2(base.x + tx + d * x, base.y + ty + d * y) for x, y in src["config"]]
        return list(v) == expected
    return False


def verify_witness(witness: PlaneWitness, plane: Optional[PlaneColoring] = None) -> bool:
    """Re-query every vertex and check the exact geometry of the figure."""
    plane = plane or parse_coloring(witness.coloring)
    return recolor_ok(witness, plane) and geometry_ok(witness)
