"""Command-line front end.

Exit status: 0 on success or acceptance, 1 on a semantic rejection (a
failed check, an unrealizable search, an unsupported input such as a
non-triangular hull), 2 on usage or format errors, including a tripped
size guard. Reports go to stderr;
artifacts go to ``-o`` or stdout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .chirotope import (
    all_surrounding_sequences,
    chirotope_from_points,
    convex_hull,
    normalize_triangular_hull,
    validate_chirotope,
)
from .errors import FormatError, InstanceTooLarge, SGEError, VersionError
from .geometry import verify_sge
from .reduction import reduce_to_sge
from .solver import brute_force_sge, embed_from_realization, extract_realization, grid_realize


class Reject(Exception):
    """Semantic rejection; maps to exit status 1."""


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_ot_validate(args):
    chi = formats.read(args.chirotope, "chirotope")
    report = validate_chirotope(chi)
    if not report:
        raise Reject(f"invalid chirotope: {report.message}")
    _report(f"valid chirotope on {chi.n} elements")


def cmd_ot_from_points(args):
    pts = formats.points_from_placement(formats.read(args.points, "placement"))
    chi = chirotope_from_points(pts)
    _emit(formats.format_chirotope(chi), args.output)
    _report(f"order type of {chi.n} points")


def cmd_ot_hull(args):
    chi = formats.read(args.chirotope, "chirotope")
    hull = convex_hull(chi)
    _emit(" ".join(map(str, hull)) + "\n", args.output)
    _report(f"clockwise hull with {len(hull)} vertices")


def cmd_ot_sequences(args):
    chi = formats.read(args.chirotope, "chirotope")
    seqs = all_surrounding_sequences(chi)
    lines = [f"{v} {s.kind}: " + " ".join(map(str, s.order)) for v, s in seqs.items()]
    _emit("\n".join(lines) + "\n", args.output)


def cmd_ot_normalize(args):
    chi = formats.read(args.chirotope, "chirotope")
    out, flipped = normalize_triangular_hull(chi)
    _emit(formats.format_chirotope(out), args.output)
    _report(f"flipped elements: {sorted(flipped)}; hull {list(convex_hull(out))}")


def cmd_reduce(args):
    chi = formats.read(args.chirotope, "chirotope")
    inst = reduce_to_sge(chi, normalize=args.normalize)
    _emit(formats.format_instance(inst), args.output)
    _report(f"{inst.k} graphs on {len(inst.labels)} labels")


def cmd_embed(args):
    chi = formats.read(args.chirotope, "chirotope")
    pts = formats.points_from_placement(formats.read(args.points, "placement"))
    inst = formats.read(args.instance, "sge") if args.instance else None
    placement = embed_from_realization(chi, pts, inst)
    _emit(formats.format_placement(placement), args.output)
    _report(f"placed {len(placement)} labels")


def cmd_verify(args):
    inst = formats.read(args.instance, "sge")
    placement = formats.read(args.placement, "placement")
    report = verify_sge(inst, placement)
    if not report:
        raise Reject(f"not a simultaneous embedding: {report.describe()}")
    _report(report.describe())


def cmd_extract(args):
    inst = formats.read(args.instance, "sge")
    placement = formats.read(args.placement, "placement")
    report = verify_sge(inst, placement)
    if not report:
        raise Reject(f"placement rejected: {report.describe()}")
    pts, chi = extract_realization(inst, placement)
    _emit(formats.format_chirotope(chi), args.output)
    if args.points_out:
        Path(args.points_out).write_text(
            formats.format_placement(formats.placement_from_points(pts)), encoding="utf-8")
    _report(f"extracted order type on {chi.n} elements")


def cmd_realize(args):
    chi = formats.read(args.chirotope, "chirotope")
    pts = grid_realize(chi, args.grid, max_nodes=args.max_nodes)
    if pts is None:
        raise Reject(f"no realization on the [0,{args.grid}]^2 grid (not a proof of non-realizability)")
    _emit(formats.format_placement(formats.placement_from_points(pts)), args.output)
    _report(f"realized on the [0,{args.grid}]^2 grid")


def cmd_solve_sge(args):
    inst = formats.read(args.instance, "sge")
    placement = brute_force_sge(inst, args.grid, guard=args.guard)
    if placement is None:
        raise Reject(f"no simultaneous embedding on the [0,{args.grid}]^2 grid")
    _emit(formats.format_placement(placement), args.output)
    _report(f"found a simultaneous embedding of {inst.k} graphs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgereduce",
        description="Order types, the reduction to simultaneous geometric embedding, and checkers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, *positional):
        p = sub.add_parser(name, help=help)
        for arg in positional:
            p.add_argument(arg)
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        p.set_defaults(func=func)
        return p

    add("ot-validate", cmd_ot_validate, "check the chirotope axioms", "chirotope")
    add("ot-from-points", cmd_ot_from_points, "order type of a point placement labelled 0..n-1", "points")
    add("ot-hull", cmd_ot_hull, "clockwise convex hull", "chirotope")
    add("ot-sequences", cmd_ot_sequences, "surrounding sequence of every element", "chirotope")
    add("ot-normalize", cmd_ot_normalize, "reorient to a triangular convex hull", "chirotope")
    p = add("reduce", cmd_reduce, "build the gadget family", "chirotope")
    p.add_argument("--normalize", action="store_true", help="fix a non-triangular hull first")
    p = add("embed", cmd_embed, "placement of the reduced instance from a realization",
            "chirotope", "points")
    p.add_argument("--instance", help="reduced instance (rebuilt from the chirotope if omitted)")
    add("verify", cmd_verify, "check that a placement is a simultaneous embedding", "instance", "placement")
    p = add("extract", cmd_extract, "recover the order type from an accepted placement",
            "instance", "placement")
    p.add_argument("--points-out", help="also write the extracted points")
    p = add("realize", cmd_realize, "search an integer grid for a realization", "chirotope")
    p.add_argument("--grid", type=int, default=12)
    p.add_argument("--max-nodes", type=int, default=None)
    p = add("solve-sge", cmd_solve_sge, "brute-force search for a simultaneous embedding", "instance")
    p.add_argument("--grid", type=int, default=6)
    p.add_argument("--guard", type=int, default=8)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except Reject as exc:
        _report(str(exc))
        return 1
    except (FormatError, VersionError, InstanceTooLarge, OSError) as exc:
        _report(f"error: {exc}")
        return 2
    except SGEError as exc:
        _report(f"rejected: {type(exc).__name__}: {exc}")
        return 1
    except ValueError as exc:
        _report(f"error: {exc}")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
