"""How many 2-colorings of a small grid avoid a monochromatic rectangle?

Walks every coloring of a few grid shapes, counts the rectangle-free ones
with the bit-parallel search, and prints the first rectangle found in a
fixed example grid.
"""
from euclid_ramsey import GridColoring, find_mono_rectangle

for w, h in [(2, 2), (3, 3), (3, 4), (4, 4)]:
    n = w * h
    free = sum(find_mono_rectangle(GridColoring(w, h, 2, [(code >> i) & 1 for i in range(n)])) is None
               for code in range(1 << n))
    print(f"{w}x{h}: {free} of {1 << n} colorings have no monochromatic rectangle")

grid = GridColoring.from_rows([[0, 1, 1, 0], [1, 0, 1, 1], [0, 1, 1, 1]])
hit = find_mono_rectangle(grid)
print("example grid, first rectangle:", hit, "corners", hit.corners)
