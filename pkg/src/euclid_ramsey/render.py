"""Static SVG figures of grid colorings and plane witnesses.

Grid renders are exact.  Witness renders rasterize the plane coloring on a
rational sample lattice; that raster is the only approximation in the
package and the SVG metadata says so.
"""
from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Optional
from xml.sax.saxutils import escape

from .grid import GridColoring
from .plane import PlaneColoring
from .qr3 import PointE2, QR3
from .witnesses import PlaneWitness

PALETTE = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
    "#e6550d", "#31a354", "#756bb1", "#636363", "#9ecae1", "#fdae6b", "#a1d99b", "#bcbddc",
    "#fdd0a2", "#c7e9c0", "#dadaeb", "#d9d9d9", "#6baed6", "#fd8d3c", "#74c476", "#9e9ac8",
    "#969696", "#c6dbef", "#fdbe85", "#c7c7c7",
]


def _num(value) -> str:
    value = Fraction(value)
    text = f"{Decimal(value.numerator) / Decimal(value.denominator):.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def _approx(v: QR3) -> Fraction:
    return Fraction(str(v.to_decimal(20))).limit_denominator(10 ** 6)


def _style(colors: int) -> str:
    rules = [f".c{c}{{fill:{PALETTE[c % len(PALETTE)]}}}" for c in range(colors)]
    rules.append(".mark{fill:none;stroke:#000;stroke-width:2}")
    rules.append(".vertex{fill:#000}")
    return "<style>" + "".join(rules) + "</style>"


def render_grid(coloring: GridColoring, cell: int = 20, highlight: Iterable[tuple] = ()) -> str:
    """One ``<rect>`` per cell, filled by color class; row ``y = 0`` at the bottom."""
    w, h = coloring.width, coloring.height
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * cell}" height="{h * cell}" '
        f'viewBox="0 0 {w * cell} {h * cell}">',
        f"<metadata>grid {w}x{h} colors={coloring.colors}; exact</metadata>",
        _style(coloring.colors),
    ]
    for y in range(h):
        for x in range(w):
            out.append(f'<rect class="c{coloring[x, y]}" x="{x * cell}" y="{(h - 1 - y) * cell}" '
                       f'width="{cell}" height="{cell}"/>')
    for x, y in highlight:
        out.append(f'<rect class="mark" x="{x * cell}" y="{(h - 1 - y) * cell}" width="{cell}" height="{cell}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_witness(witness: PlaneWitness, plane: PlaneColoring, pitch: Optional[Fraction] = None,
                   size: int = 512) -> str:
    """Witness figure over a raster of the plane coloring sampled every ``pitch`` units."""
    xs = [v.x for v in witness.vertices]
    ys = [v.y for v in witness.vertices]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y)
    span_q = _approx(span) or Fraction(1)
    margin = span_q / 4
    if pitch is None:
        pitch = span_q / 48
    pitch = Fraction(pitch)
    x0 = _approx(lo_x) - margin
    y0 = _approx(lo_y) - margin
    extent = span_q + 2 * margin
    cols = int(extent / pitch) + 2
    scale = Fraction(size) / (cols * pitch)
    height = cols * pitch * scale

    def sx(v: QR3) -> str:
        return _num(Fraction(str(((v - x0) * scale).to_decimal(20))))

    def sy(v: QR3) -> str:
        return _num(Fraction(str((QR3(height) - (v - y0) * scale).to_decimal(20))))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        "<metadata>" + escape(
            f"witness kind={witness.kind} color={witness.color} coloring={witness.coloring}; "
            f"approximate raster: plane coloring sampled at pitch {pitch.numerator}/{pitch.denominator} "
            f"from ({x0.numerator}/{x0.denominator}, {y0.numerator}/{y0.denominator}); "
            f"vertex data attributes exact to 12 decimal places") + "</metadata>",
        _style(plane.colors),
    ]
    cell = _num(pitch * scale)
    for j in range(cols):
        for i in range(cols):
            p = PointE2(x0 + (i + Fraction(1, 2)) * pitch, y0 + (j + Fraction(1, 2)) * pitch)
            if not plane.contains(p):
                continue
            px = _num(i * pitch * scale)
            py = _num(height - (j + 1) * pitch * scale)
            out.append(f'<rect class="c{plane(p)}" x="{px}" y="{py}" width="{cell}" height="{cell}"/>')
    outline = witness.vertices
    if witness.kind == "rectangle":
        outline = (outline[0], outline[1], outline[3], outline[2])
    pts = " ".join(f"{sx(v.x)},{sy(v.y)}" for v in outline)
    out.append(f'<polygon class="mark" points="{pts}"/>')
    for v in witness.vertices:
        out.append(f'<circle class="vertex" cx="{sx(v.x)}" cy="{sy(v.y)}" r="4" '
                   f'data-x="{v.x.format(12)}" data-y="{v.y.format(12)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
