"""Monochromatic rectangles and equilateral triangles in colorings of the plane.

The plane coloring is sampled on a coset lattice, a grid search finds a
monochromatic square, and the result is mapped back to exact points in
Q(sqrt 3).  Each witness is re-verified before printing.
"""
from fractions import Fraction

from euclid_ramsey import (GridColoring, PeriodicColoring, aspect_ratio_witness, rectangle_witness,
                           strip_coloring, triangle_witness, unit_square_triangle_witness, verify_witness)

strips = strip_coloring(1)
tiles = PeriodicColoring(GridColoring(3, 2, 2, [0, 1, 1, 1, 0, 0]), Fraction(1, 7), Fraction(1, 5))

for label, wit, plane in [
    ("rectangle, r=1/3, strips", rectangle_witness(strips, Fraction(1, 3)), strips),
    ("aspect ratio 2/5, tiles", aspect_ratio_witness(tiles, Fraction(2, 5)), tiles),
    ("triangle, r=1, strips", triangle_witness(strips, 1, window=30), strips),
    ("unit-square triangle, r=2/45", unit_square_triangle_witness(tiles.restricted(), Fraction(2, 45)),
     tiles.restricted()),
]:
    assert verify_witness(wit, plane)
    verts = ", ".join(f"({v.x}, {v.y})" for v in wit.vertices)
    print(f"{label}: color {wit.color}, multiple {wit.multiple}\n    {verts}")

# strips of width sqrt3/2 never hold a side-1 triangle; the first one found is larger
print("smallest triangle side in the strip coloring:", triangle_witness(strips, 1, window=30).side)
