"""Search colored grids and planes for monochromatic figures.

Exit status: 0 success, 1 nothing found (within the window, or the
instance has no avoiding coloring), 2 usage or domain error,
3 inconsistency in a construction that must succeed.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import grid as gridmod
from .extremal import AvoidanceInstance, Satisfiable, solve_avoidance
from .gridio import GridFormatError, format_grid, load_grid, resolve_configuration
from .plane import DomainError, parse_coloring
from .qr3 import PointE2, as_fraction, fraction_str
from .render import render_grid, render_witness
from .witnesses import CONSTRUCTIONS, InconsistencyError, PlaneWitness, homothetic_witness

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected P/Q or an integer, got {text!r}") from exc


def _point(text: str) -> PointE2:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected X,Y with exact rationals, got {text!r}")
    return PointE2(_rational(parts[0]), _rational(parts[1]))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rect_json(w: gridmod.RectangleWitness) -> dict:
    return {"x": w.x, "y": w.y, "d1": w.d1, "d2": w.d2, "color": w.color}


def _hom_json(h: gridmod.Homothety, color: int) -> dict:
    return {"translate_x": h.translate_x, "translate_y": h.translate_y, "dilation": h.dilation, "color": color}


def cmd_grid_search(args) -> int:
    coloring = load_grid(args.input)
    if args.shape == "rectangle":
        hit = gridmod.find_mono_rectangle(coloring)
        found = [_rect_json(hit)] if hit else []
    elif args.shape == "square":
        hit = gridmod.find_mono_square(coloring)
        found = [_rect_json(hit)] if hit else []
    else:
        hit = gridmod.find_homothetic_copy(coloring, resolve_configuration(args.config))
        found = [_hom_json(*hit)] if hit else []
    if args.format == "svg":
        cells = []
        if found and "d1" in found[0]:
            cells = gridmod.RectangleWitness(**found[0]).corners
        elif found:
            h = gridmod.Homothety(found[0]["translate_x"], found[0]["translate_y"], found[0]["dilation"])
            cells = h.apply(resolve_configuration(args.config))
        _emit(render_grid(coloring, highlight=cells), args.out)
    elif args.format == "text":
        _emit("".join(" ".join(f"{k}={v}" for k, v in w.items()) + "\n" for w in found) or "none\n", args.out)
    else:
        _emit(json.dumps({"witnesses": found}, indent=2) + "\n", args.out)
    return EXIT_OK if found else EXIT_NOT_FOUND


def cmd_grid_enumerate(args) -> int:
    coloring = load_grid(args.input)
    config = resolve_configuration(args.config)
    found = [_hom_json(h, c) for h, c in gridmod.enumerate_witnesses(coloring, config)]
    if args.format == "text":
        _emit("".join(" ".join(f"{k}={v}" for k, v in w.items()) + "\n" for w in found), args.out)
    else:
        _emit(json.dumps({"count": len(found), "witnesses": found}, indent=2) + "\n", args.out)
    return EXIT_OK if found else EXIT_NOT_FOUND


def cmd_solve(args) -> int:
    inst = AvoidanceInstance(
        args.width, args.height, args.colors, resolve_configuration(args.target),
        fix_first=not args.no_fix_first, color_canonical=not args.no_color_canonical,
        reflection=args.reflection, order=args.order, node_budget=args.budget,
        workers=args.workers, deterministic=not args.nondeterministic, seed=args.seed)
    outcome = solve_avoidance(inst, verbose=args.verbose)
    if isinstance(outcome, Satisfiable):
        text = render_grid(outcome.coloring) if args.format == "svg" else format_grid(outcome.coloring)
        _emit(text, args.out)
        return EXIT_OK
    print(f"no coloring: {outcome.name}", file=sys.stderr)
    return EXIT_NOT_FOUND


def cmd_threshold(args) -> int:
    config = resolve_configuration(args.target)
    report = gridmod.forced_threshold(config, args.colors, args.max_n, budget=args.budget)
    if args.format == "text":
        lines = [f"n={v.n} {v.status} ({v.method})" for v in report.verdicts]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {
            "config": [list(p) for p in config.points],
            "colors": args.colors,
            "verdicts": [
                {"n": v.n, "status": v.status, "method": v.method,
                 "witness": format_grid(v.witness) if v.witness is not None else None}
                for v in report.verdicts
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_plane_witness(args) -> int:
    plane = parse_coloring(args.coloring)
    base = args.base or PointE2(0, 0)
    if args.construction == "homothetic":
        wit = homothetic_witness(plane, resolve_configuration(args.target), base, args.window)
    else:
        if args.r is None:
            raise UsageError(f"--r is required for the {args.construction} construction")
        build = CONSTRUCTIONS[args.construction]
        if args.construction.endswith("unit-square"):
            wit = build(plane, args.r, base)
        else:
            wit = build(plane, args.r, base, args.window)
    if wit is None:
        if args.format == "json":
            _emit(json.dumps({"witnesses": []}, indent=2) + "\n", args.out)
        print("not found within window", file=sys.stderr)
        return EXIT_NOT_FOUND
    if args.format == "svg":
        _emit(render_witness(wit, plane, pitch=args.pitch), args.out)
    elif args.format == "text":
        verts = "; ".join(f"({v.x}, {v.y})" for v in wit.vertices)
        _emit(f"{wit.kind} color={wit.color} r={fraction_str(wit.r)} multiple={wit.multiple} vertices={verts}\n",
              args.out)
    else:
        _emit(wit.dumps(), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        wit = PlaneWitness.from_json(json.loads(text))
        plane = parse_coloring(args.coloring or wit.coloring)
        _emit(render_witness(wit, plane, pitch=args.pitch), args.out)
    else:
        from .gridio import parse_grid

        _emit(render_grid(parse_grid(text)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="euclid-ramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grid-search", help="first monochromatic rectangle, square or configuration copy")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--shape", choices=["rectangle", "square", "config"], default="rectangle")
    p.add_argument("--config", default="square", help="builtin name or configuration file (shape=config)")
    p.add_argument("--format", choices=["json", "text", "svg"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_grid_search)

    p = sub.add_parser("grid-enumerate", help="every monochromatic homothetic copy")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--config", default="square")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_grid_enumerate)

    p = sub.add_parser("solve", help="find a coloring with no monochromatic copy of the target")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--colors", type=int, default=2)
    p.add_argument("--target", default="square")
    p.add_argument("--budget", type=int, help="node budget")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--order", choices=["dynamic", "row-major"], default="dynamic")
    p.add_argument("--no-fix-first", action="store_true")
    p.add_argument("--no-color-canonical", action="store_true")
    p.add_argument("--reflection", action="store_true")
    p.add_argument("--nondeterministic", action="store_true")
    p.add_argument("--verbose", action="store_true", help="stats record on stderr")
    p.add_argument("--format", choices=["text", "svg"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("threshold", help="forced/avoidable classification of n x n grids")
    p.add_argument("--target", default="square")
    p.add_argument("--colors", type=int, default=2)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("plane-witness", help="monochromatic figure in a coloring of the plane")
    p.add_argument("--construction", required=True, choices=sorted(CONSTRUCTIONS) + ["homothetic"])
    p.add_argument("--coloring", required=True, help="registry string, e.g. strip:d=1/1,phase=0/1")
    p.add_argument("--r", type=_rational)
    p.add_argument("--base", type=_point, help="X,Y coset base")
    p.add_argument("--window", type=int)
    p.add_argument("--target", default="square", help="configuration for the homothetic construction")
    p.add_argument("--pitch", type=_rational, help="raster pitch for svg output")
    p.add_argument("--format", choices=["json", "text", "svg"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plane_witness)

    p = sub.add_parser("render", help="SVG of a grid file or witness JSON")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--coloring", help="override the witness coloring registry string")
    p.add_argument("--pitch", type=_rational)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (UsageError, DomainError, GridFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
