"""Monochromatic configurations in finite colorings of grids and of the plane."""
from .extremal import (AvoidanceInstance, BudgetExceeded, ExhaustedUnsat, Satisfiable, count_avoiding,
                       solve_avoidance, verify_avoidance)
from .grid import (DOMINO, SQUARE, TRIANGLE_PREIMAGE, Configuration, GridColoring, Homothety,
                   RectangleWitness, ThresholdReport, enumerate_witnesses, find_homothetic_copy,
                   find_mono_rectangle, find_mono_square, forced_threshold)
from .plane import (ConstantColoring, CosetGrid, FunctionColoring, PeriodicColoring, PlaneColoring, ShearMap,
                    StripColoring, coset_grid_coloring, parse_coloring, strip_coloring)
from .qr3 import QR3, PointE2
from .witnesses import (PlaneWitness, aspect_ratio_witness, homothetic_witness, parametric_witnesses,
                        rectangle_witness, triangle_witness, unit_square_aspect_witness,
                        unit_square_triangle_witness, verify_witness)

__version__ = "0.1.0"
