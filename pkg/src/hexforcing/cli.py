"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 bad input, 3 size limit hit
or internal cross-check disagreement.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bounds import bounds_report, edge_class_partition, normal_components
from .errors import HexError, LimitExceeded
from .families import Family, FamilySpec, certify, construct_cfs, construction_cuts, formula_cf, generate
from .forcing import definitional_counterexample, min_complete_forcing, uncovered_frame
from .hexgrid import format_cuts, format_edges, parse, parse_edges, serialize

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_CF_LIMIT = 14


class _InternalError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text)


def _fmt_edge(e) -> str:
    return f"{e.u.x} {e.u.y} {e.v.x} {e.v.y}"


def _spec(args) -> FamilySpec:
    return FamilySpec(Family(args.family), args.p, args.q)


# -- verbs ------------------------------------------------------------------
def cmd_gen(args, out):
    hs, _ = generate(_spec(args))
    _write(args.output, serialize(hs), out)
    return EXIT_OK


def cmd_cf(args, out):
    hs = parse(_read(args.system))
    if hs.n > args.limit:
        raise LimitExceeded(f"{hs.n} hexagons is above the exact-search limit {args.limit}")
    k, witness = min_complete_forcing(hs)
    out.write(f"cf = {k}\n")
    if args.output:
        _write(args.output, format_edges(witness), out)
    return EXIT_OK


def cmd_verify(args, out):
    hs = parse(_read(args.system))
    s = parse_edges(_read(args.set))
    found = uncovered_frame(hs, s, method=args.method)
    if args.oracle:
        bad = definitional_counterexample(hs, s)
        if (found is None) != (bad is None):
            raise _InternalError("frame test and definitional oracle disagree")
    if found is None:
        out.write("PASS\n")
        return EXIT_OK
    cycle, frame = found
    out.write("FAIL\n")
    out.write(f"cycle\t{len(cycle)}\t" + " ".join(f"{v.x},{v.y}" for v in cycle.vertices) + "\n")
    for e in sorted(frame):
        out.write(f"frame\t{_fmt_edge(e)}\n")
    return EXIT_FAIL


def cmd_bounds(args, out):
    hs = parse(_read(args.system))
    rep = bounds_report(hs)
    for key in ("n", "normal", "components", "k"):
        out.write(f"{key}\t{rep[key]}\n")
    out.write("class\tsize\thexagons\tnu\n")
    for i, c in enumerate(rep["classes"], start=1):
        out.write(f"{i}\t{c['size']}\t{c['hexagons']}\t{c['nu']}\n")
    for key in ("lower_bound_hexagons", "lower_bound_matching", "parallel_direction", "upper_bound_parallel"):
        out.write(f"{key}\t{rep[key]}\n")
    if args.figure:
        from .plotting import render_svg

        part = edge_class_partition(hs)
        render_svg(hs, args.figure, edge_groups=part.classes, title=f"{part.k} edge classes")
    return EXIT_OK


def cmd_construct(args, out):
    spec = _spec(args)
    if args.cuts:
        text = format_cuts(construction_cuts(spec))
    else:
        text = format_edges(construct_cfs(spec))
    _write(args.output, text, out)
    return EXIT_OK


def cmd_certify(args, out):
    spec = _spec(args)
    c = certify(spec)
    rows = [
        ("spec", str(spec)),
        ("n", c.n),
        ("construction", c.size),
        ("formula", formula_cf(spec)),
        ("complete", c.complete),
        ("lower_bound_hexagons", c.lower_bound_hexagons),
        ("lower_bound_matching", c.lower_bound_matching),
        ("bound_used", c.bound_used),
        ("verdict", c.verdict),
    ]
    for k, v in rows:
        out.write(f"{k}\t{v}\n")
    if args.figure:
        from .plotting import render_svg

        hs, _ = generate(spec)
        render_svg(hs, args.figure, highlight=c.witness, title=f"{spec}: {c.verdict}")
    return EXIT_OK if c.verdict == "OPTIMAL" else EXIT_FAIL


def cmd_decompose(args, out):
    hs = parse(_read(args.system))
    comps = normal_components(hs)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for i, comp in enumerate(comps, start=1):
        path = outdir / f"{args.prefix}{i}.hex"
        path.write_text(serialize(comp))
        out.write(f"{path}\t{comp.n}\n")
    return EXIT_OK


def cmd_viz(args, out):
    from .plotting import dual_dot, render_svg

    hs = parse(_read(args.system))
    s = hs.check_edges(parse_edges(_read(args.set))) if args.set else frozenset()
    if args.svg:
        render_svg(hs, args.svg, highlight=s)
    if args.dot:
        _write(args.dot, dual_dot(hs, highlight=s), out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------
def _family_args(p: argparse.ArgumentParser):
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, default=1, help="ignored for hexagon")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hexforcing", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="write a family member as a HEXSYS file")
    _family_args(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cf", help="exact complete forcing number")
    p.add_argument("system")
    p.add_argument("-o", "--output", help="write the witness edge set here")
    p.add_argument("--limit", type=int, default=DEFAULT_CF_LIMIT, help="max hexagons (default %(default)s)")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("verify", help="check a complete forcing set")
    p.add_argument("system")
    p.add_argument("--set", required=True, help="edge-set file")
    p.add_argument("--oracle", action="store_true", help="cross-check against perfect matching enumeration")
    p.add_argument("--method", choices=("auto", "enumerate", "search"), default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="fixed edges, edge classes and bounds")
    p.add_argument("system")
    p.add_argument("--figure", help="SVG of the edge-class partition")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="explicit forcing set for a family member")
    _family_args(p)
    p.add_argument("-o", "--output")
    p.add_argument("--cuts", action="store_true", help="write one block per cut")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="construction size against lower bounds")
    _family_args(p)
    p.add_argument("--figure", help="SVG with the construction highlighted")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("decompose", help="write each normal component")
    p.add_argument("system")
    p.add_argument("-o", "--outdir", default=".")
    p.add_argument("--prefix", default="component_")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("viz", help="SVG drawing and DOT dual graph")
    p.add_argument("system")
    p.add_argument("--set", help="edge set to highlight")
    p.add_argument("--svg")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_viz)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except _InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (HexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
