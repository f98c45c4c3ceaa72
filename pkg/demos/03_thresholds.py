"""Forced thresholds for a few lattice configurations.

For each target and color count, report for n = 1, 2, ... whether every
coloring of the n x n grid must contain a monochromatic homothetic copy.
"""
from euclid_ramsey import DOMINO, SQUARE, TRIANGLE_PREIMAGE, forced_threshold

for name, config, colors, max_n in [("domino", DOMINO, 2, 4), ("domino", DOMINO, 3, 4),
                                     ("triangle-preimage", TRIANGLE_PREIMAGE, 2, 5), ("square", SQUARE, 2, 8)]:
    report = forced_threshold(config, colors, max_n)
    row = " ".join(f"{v.n}:{v.status[0]}" for v in report.verdicts)
    print(f"{name:18s} k={colors}  {row}   threshold={report.threshold}")
