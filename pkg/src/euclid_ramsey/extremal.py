"""Colorings that avoid monochromatic homothetic copies of a configuration.

:func:`solve_avoidance` is a chronological backtracking search with
forbidden-color propagation and symmetry breaking (see ``_kernel``).
:func:`verify_avoidance` and :func:`count_avoiding` are independent
checkers used to certify its answers on small instances.
"""
from __future__ import annotations

import hashlib
import math
import sys
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .grid import DEFAULT_EXHAUSTION_CAP, Configuration, GridColoring

UNLIMITED = 2 ** 62


class TrivialTargetError(ValueError):
    """A one-point target is present in every coloring, so it cannot be avoided."""


class ExhaustionCapError(ValueError):
    """Raised when exhaustive enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class AvoidanceInstance:
    width: int
    height: int
    colors: int
    target: Configuration
    fix_first: bool = True
    color_canonical: bool = True
    reflection: bool = False
    order: str = "dynamic"
    node_budget: Optional[int] = None
    workers: int = 1
    deterministic: bool = True
    seed: Optional[int] = None
    propagation: bool = True

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.width}x{self.height}")
        if self.colors < 2:
            raise ValueError("avoidance needs at least 2 colors")
        if self.colors > 36:
            raise ValueError("at most 36 colors are supported")
        if len(self.target) < 2:
            raise TrivialTargetError("a one-point target is unavoidable in any non-empty grid")
        if self.order not in ("dynamic", "row-major"):
            raise ValueError(f"unknown cell order {self.order!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node budget must be non-negative")
        if self.reflection and self.target.mirrored() != self.target:
            raise ValueError("reflection symmetry needs a left-right symmetric target")


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    propagations: int
    millis: int

    def record(self, outcome: str) -> str:
        return f"nodes={self.nodes} propagations={self.propagations} millis={self.millis} outcome={outcome}"


@dataclass(frozen=True)
class Satisfiable:
    coloring: GridColoring
    stats: SolveStats
    name = "satisfiable"


@dataclass(frozen=True)
class ExhaustedUnsat:
    stats: SolveStats
    name = "unsat"


@dataclass(frozen=True)
class BudgetExceeded:
    stats: SolveStats
    name = "budget-exceeded"


SolveOutcome = Union[Satisfiable, ExhaustedUnsat, BudgetExceeded]


def placements(width: int, height: int, target: Configuration) -> np.ndarray:
    """Cell indices ``y * width + x`` of every in-bounds homothetic copy of ``target``."""
    rows = []
    sx, sy = target.span_x, target.span_y
    d = 1
    while d * sx < width and d * sy < height:
        for ty in range(height - d * sy):
            for tx in range(width - d * sx):
                rows.append([(ty + d * y) * width + tx + d * x for x, y in target.points])
        d += 1
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(target))


class _Problem:
    """Flattened arrays handed to the compiled search."""

    def __init__(self, inst: AvoidanceInstance):
        self.ncell = inst.width * inst.height
        self.copies = placements(inst.width, inst.height, inst.target)
        incidence = [[] for _ in range(self.ncell)]
        for m, row in enumerate(self.copies):
            for v in row:
                incidence[v].append(m)
        self.cstart = np.zeros(self.ncell + 1, dtype=np.int64)
        self.cstart[1:] = np.cumsum([len(lst) for lst in incidence])
        self.clist = np.array([m for lst in incidence for m in lst], dtype=np.int64)
        self.order = np.arange(self.ncell, dtype=np.int64)
        self.noise = _tie_noise(self.ncell, inst.seed)
        if inst.reflection:
            self.reflect_row = np.arange(inst.width, dtype=np.int64)
        else:
            self.reflect_row = np.zeros(0, dtype=np.int64)

    def run(self, inst, init, budget, split_depth=0, frontier=None):
        from ._kernel import search

        if frontier is None:
            frontier = np.zeros((1, self.ncell), dtype=np.int64)
        return search(self.ncell, inst.colors, self.copies, self.cstart, self.clist, self.order,
                      inst.order == "dynamic", self.noise, inst.fix_first, inst.color_canonical,
                      self.reflect_row, init, budget, split_depth, frontier, inst.propagation)


def _tie_noise(ncell: int, seed: Optional[int]) -> np.ndarray:
    # stateless per-cell tie-breaks keep subtree searches independent of visiting order
    if seed is None:
        return np.zeros(ncell, dtype=np.int64)
    digest = hashlib.sha256(f"euclid-ramsey:{seed}".encode()).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
    return rng.integers(0, 1024, size=ncell, dtype=np.int64)


def _solve_subtree(inst, init, budget):
    problem = _Problem(inst)
    status, val, nodes, props, _ = problem.run(inst, init, budget)
    return int(status), val.copy(), int(nodes), int(props)


def _split_depth(colors: int, workers: int) -> int:
    return max(1, math.ceil(math.log(4 * workers, colors)))


def solve_avoidance(instance: AvoidanceInstance, verbose: bool = False) -> SolveOutcome:
    """Search for a coloring of the instance grid with no monochromatic copy of the target.

    With several workers the tree is split after a few decisions and the
    subtrees are searched in separate processes.  In deterministic mode the
    answer is taken from the first satisfiable subtree in search order, so
    the witness matches the single-worker run.  The node budget applies to
    each subtree separately in that mode.
    """
    from ._kernel import BUDGET, SAT

    inst = instance
    start = time.perf_counter()
    budget = UNLIMITED if inst.node_budget is None else inst.node_budget
    problem = _Problem(inst)
    empty = np.full(problem.ncell, -1, dtype=np.int64)

    if inst.workers == 1:
        status, val, nodes, props, _ = problem.run(inst, empty, budget)
        results = [(int(status), val.copy(), int(nodes), int(props))]
    else:
        depth = _split_depth(inst.colors, inst.workers)
        frontier = np.zeros((inst.colors ** depth, problem.ncell), dtype=np.int64)
        status0, _, nodes0, props0, nfront = problem.run(inst, empty, budget, depth, frontier)
        results = [(int(status0), empty, int(nodes0), int(props0))]
        results += _run_parallel(inst, frontier[:nfront], budget)

    nodes = sum(r[2] for r in results)
    props = sum(r[3] for r in results)
    stats = SolveStats(nodes, props, int((time.perf_counter() - start) * 1000))
    outcome: SolveOutcome
    sat = next((r for r in results if r[0] == SAT), None)
    if sat is not None:
        coloring = GridColoring(inst.width, inst.height, inst.colors, sat[1].tolist())
        outcome = Satisfiable(coloring, stats)
    elif any(r[0] == BUDGET for r in results):
        outcome = BudgetExceeded(stats)
    else:
        outcome = ExhaustedUnsat(stats)
    if verbose:
        print(stats.record(outcome.name), file=sys.stderr)
    return outcome


def _run_parallel(inst, frontier, budget):
    from ._kernel import SAT

    results = []
    with ProcessPoolExecutor(max_workers=inst.workers) as pool:
        futures = [pool.submit(_solve_subtree, inst, row.copy(), budget) for row in frontier]
        if inst.deterministic:
            # the first satisfiable subtree in order wins; later ones are cancelled
            for fut in futures:
                res = fut.result()
                results.append(res)
                if res[0] == SAT:
                    break
        else:
            pending = set(futures)
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                finished = [f.result() for f in futures if f in done]
                results.extend(finished)
                if any(r[0] == SAT for r in finished):
                    break
        for fut in futures:
            fut.cancel()
    return results


def verify_avoidance(coloring: GridColoring, target: Configuration) -> bool:
    """True iff no in-bounds lattice homothety maps ``target`` onto one color."""
    grid = np.array(coloring.cells, dtype=np.int64).reshape(coloring.height, coloring.width)
    h, w = grid.shape
    xs = [p[0] for p in target.points]
    ys = [p[1] for p in target.points]
    sx, sy = max(xs), max(ys)
    if sx == 0 and sy == 0:
        return False
    d = 1
    while d * sx < w and d * sy < h:
        nx, ny = w - d * sx, h - d * sy
        first = grid[d * ys[0]:d * ys[0] + ny, d * xs[0]:d * xs[0] + nx]
        same = np.ones_like(first, dtype=bool)
        for x, y in zip(xs[1:], ys[1:]):
            same &= grid[d * y:d * y + ny, d * x:d * x + nx] == first
        if same.any():
            return False
        d += 1
    return True


def _avoid_flags(width, height, colors, target, cap, chunk=1 << 18):
    ncell = width * height
    total = colors ** ncell
    if total > cap:
        raise ExhaustionCapError(
            f"{colors}^{ncell} colorings exceed the exhaustion cap {cap}; use solve_avoidance")
    cells = []
    sx, sy = target.span_x, target.span_y
    d = 1
    while d * sx < width and d * sy < height:
        for ty in range(height - d * sy):
            for tx in range(width - d * sx):
                cells.append([(ty + d * y) * width + tx + d * x for x, y in target.points])
        if sx == 0 and sy == 0:
            break
        d += 1
    weights = colors ** np.arange(ncell, dtype=np.int64)
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % colors
        hit = np.zeros(len(codes), dtype=bool)
        for placement in cells:
            block = digits[:, placement]
            hit |= (block == block[:, :1]).all(axis=1)
        yield lo, ~hit


def count_avoiding(width: int, height: int, colors: int, target: Configuration,
                   cap: int = DEFAULT_EXHAUSTION_CAP) -> int:
    """Exact number of colorings with no monochromatic homothetic copy of ``target``."""
    return int(sum(int(flags.sum()) for _, flags in _avoid_flags(width, height, colors, target, cap)))


def first_avoiding(width: int, height: int, colors: int, target: Configuration,
                   cap: int = DEFAULT_EXHAUSTION_CAP) -> Optional[GridColoring]:
    """The avoiding coloring with the smallest base-``colors`` code (cell 0 least significant)."""
    for lo, flags in _avoid_flags(width, height, colors, target, cap):
        idx = np.flatnonzero(flags)
        if len(idx):
            code = lo + int(idx[0])
            cells = []
            for _ in range(width * height):
                code, c = divmod(code, colors)
                cells.append(c)
            return GridColoring(width, height, colors, cells)
    return None
