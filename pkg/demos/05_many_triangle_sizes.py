"""Distinct triangle sizes from one family of scales.

Runs the unit-square triangle construction for r = 2/(45+p) over the first
twenty primes p > 14 and lists the exact side lengths.  On colorings with
coarse color classes every multiple is 1 and all sides differ; finer
colorings can make two scales land on the same side.
"""
from fractions import Fraction

from euclid_ramsey import GridColoring, PeriodicColoring, parametric_witnesses
from euclid_ramsey.plane import UNIT_SQUARE, FunctionColoring
from euclid_ramsey.qr3 import QR3


def primes_above(n, count):
    out, p = [], n + 1
    while len(out) < count:
        if all(p % q for q in range(2, int(p ** 0.5) + 1)):
            out.append(p)
        p += 1
    return out


rs = [Fraction(2, 45 + p) for p in primes_above(14, 20)]
halves = FunctionColoring(lambda p: int(p.x >= QR3(Fraction(1, 2))), 2, family="halves", domain=UNIT_SQUARE)
board = PeriodicColoring(GridColoring(2, 2, 2, [0, 1, 1, 0]), Fraction(1, 61), Fraction(1, 67)).restricted()
for label, plane in [("halves", halves), ("fine checkerboard", board)]:
    sides = [res.size for res in parametric_witnesses(plane, "triangle-unit-square", rs)]
    print(f"{label}: {len(set(sides))} distinct sides of 20")
    print("   ", " ".join(str(s) for s in sides))
