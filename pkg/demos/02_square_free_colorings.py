"""Square-free 2-colorings of n x n grids, found by the backtracking solver.

Every 2-coloring of the 15 x 15 grid contains a monochromatic square; this
script builds square-free colorings for smaller n and checks each one with
the independent verifier.  Pass a size on the command line to try larger
grids (14 takes a few minutes).
"""
import sys

from euclid_ramsey import SQUARE, AvoidanceInstance, Satisfiable, solve_avoidance, verify_avoidance
from euclid_ramsey.gridio import format_grid

sizes = [int(a) for a in sys.argv[1:]] or [6, 9, 12]
for n in sizes:
    out = solve_avoidance(AvoidanceInstance(n, n, 2, SQUARE))
    print(f"n={n}: {out.name}  ({out.stats.nodes} nodes, {out.stats.millis} ms)")
    if isinstance(out, Satisfiable):
        assert verify_avoidance(out.coloring, SQUARE)
        print(format_grid(out.coloring))
