"""Write SVG figures of a square-free coloring and a triangle witness.

Output goes to the directory given on the command line (default: ./figures).
"""
import os
import sys
from fractions import Fraction

from euclid_ramsey import SQUARE, AvoidanceInstance, solve_avoidance, strip_coloring, triangle_witness
from euclid_ramsey.render import render_grid, render_witness

out_dir = sys.argv[1] if len(sys.argv) > 1 else "figures"
os.makedirs(out_dir, exist_ok=True)

coloring = solve_avoidance(AvoidanceInstance(12, 12, 2, SQUARE)).coloring
with open(os.path.join(out_dir, "square_free_12.svg"), "w") as fh:
    fh.write(render_grid(coloring))

plane = strip_coloring(1)
wit = triangle_witness(plane, Fraction(1, 2), window=30)
with open(os.path.join(out_dir, "strip_triangle.svg"), "w") as fh:
    fh.write(render_witness(wit, plane))
print("wrote", sorted(os.listdir(out_dir)))
