"""Command-line driver: ``stgon <command> ...``.

Exit codes: 0 success (stable / total), 1 domain failure (invalid, unstable,
not total, disagreement), 2 input/output or parse failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .charge import farend_polygon, quiver_for
from .dynkin import DynkinType, DynkinTypeError, folding_data, info
from .hgon import (DegenerateHGon, InvalidHGon, core_triangle_margin, exceptional_rank,
                   is_stable, moduli_dimension, relation_rank, sample_near_regular, validate)
from .io import FileFormatError, read_polygon, write_polygon
from .svg import LAYERS, RenderSpec, render, render_panels
from .tost import DegenerateCharge, coxeter_alignment, gepner, tost_pipeline

OK, DOMAIN, IOERR = 0, 1, 2


def _type(tag: str) -> DynkinType:
    try:
        return DynkinType.parse(tag)
    except DynkinTypeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _load(path, tol=None):
    g = read_polygon(path)
    if tol is not None:
        from dataclasses import replace
        g = replace(g, tol=tol)
    return g


def cmd_info(args) -> int:
    t = args.type
    d = info(t)
    for k, v in d.items():
        print(f"{k}: {v}")
    if t.family in "EFG":
        print(f"relation_rank: {relation_rank(t)}")
    print(f"moduli_dimension: {moduli_dimension(t)}")
    return OK


def cmd_check(args) -> int:
    g = _load(args.file, args.tol)
    rep = validate(g)
    if not rep.is_valid_hgon:
        for line in rep.lines()[:2 + len(rep.residuals)]:
            print(line)
        return DOMAIN
    rep = is_stable(g)
    for line in rep.lines():
        print(line)
    return OK if rep.is_stable else DOMAIN


def cmd_tost(args) -> int:
    g = _load(args.file)
    rep = validate(g)
    if not rep.is_valid_hgon:
        for line in rep.lines():
            print(line)
        return DOMAIN
    _, _, tot = tost_pipeline(g)
    for line in tot.lines():
        print(line)
    return OK if tot.is_total else DOMAIN


def cmd_gepner(args) -> int:
    t = args.type
    g, Z, p = gepner(t)
    write_polygon(args.output, g)
    print(f"wrote {args.output}")
    if args.svg:
        _, dots = coxeter_alignment(t)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render(g, RenderSpec(size=args.size), dots=dots))
        print(f"wrote {args.svg} ({len(dots)} projection dots)")
    return OK


def cmd_sample(args) -> int:
    t = args.type
    stable = total = disagree = 0
    gds = []
    for k in range(args.n):
        g = sample_near_regular(t, args.mag, [args.seed, k])
        s = is_stable(g).is_stable
        _, _, rep = tost_pipeline(g)
        stable += s
        total += rep.is_total
        disagree += s != rep.is_total
        if rep.is_total:
            gds.append(rep.gldim)
    lo = 1 - 2 / t.h
    print(f"type {t} samples {args.n} magnitude {args.mag} seed {args.seed}")
    print(f"stable_fraction {stable / args.n:.4f}")
    print(f"total_fraction {total / args.n:.4f}")
    print(f"disagreements {disagree}")
    if gds:
        gds = np.array(gds)
        print(f"gldim min {gds.min():.12f} max {gds.max():.12f} lower_bound {lo:.12f}")
        edges = np.linspace(lo, 1.0, 11)
        counts, _ = np.histogram(np.clip(gds, lo, 1.0), bins=edges)
        for a, b, c in zip(edges[:-1], edges[1:], counts):
            print(f"  [{a:.4f}, {b:.4f}) {c}")
    return OK if disagree == 0 else DOMAIN


def cmd_render(args) -> int:
    g = _load(args.file)
    if not validate(g).is_valid_hgon:
        print("invalid polygon")
        return DOMAIN
    layers = tuple(args.layers.split(",")) if args.layers else RenderSpec().layers
    try:
        spec = RenderSpec(size=args.size, layers=layers, tiling=args.tiling)
    except ValueError as exc:
        print(exc)
        return DOMAIN
    if args.tiling and g.type != DynkinType("E", 6):
        print("tiling mode is only defined for E6 polygons")
        return DOMAIN
    if args.far_end_panels:
        if g.type != DynkinType("D", 4):
            print("far-end panels are only defined for D4 polygons")
            return DOMAIN
        from .charge import charge_from_hgon
        Z = charge_from_hgon(g)
        polys = [farend_polygon(Z, quiver_for(g.type, c)) for c in (1, 3, 4)]
        text = render_panels(polys, spec)
    else:
        text = render(g, spec)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.output}")
    return OK


def selftest_checks():
    """Quick structural checks; yields ``(name, passed, detail)``."""
    from .rootsys import build_root_system
    from .tost import roundtrip_zh
    for tag, r in (("E6", 6), ("E7", 2), ("E8", 7), ("G2", 1)):
        got = relation_rank(DynkinType.parse(tag))
        yield f"relation rank {tag}", got == r, str(got)
    for tag in ("A4", "D5", "E6", "E7", "E8"):
        t = DynkinType.parse(tag)
        got = len(build_root_system(t).roots)
        yield f"root count {tag}", got == t.n * t.h, str(got)
    for tag in ("A1", "A3", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"):
        t = DynkinType.parse(tag)
        _, Z, p = gepner(t)
        _, _, rep = tost_pipeline(sample_near_regular(t, 0.0, 0))
        yield f"gepner {tag}", rep.is_total and abs(rep.gldim - (1 - 2 / t.h)) < 1e-9, f"{rep.gldim:.12f}"
        g = sample_near_regular(t, 0.05, 1)
        d = roundtrip_zh(g)
        yield f"round trip {tag}", d < 1e-9, f"{d:.2e}"


def cmd_selftest(args) -> int:
    ok = True
    for name, passed, detail in selftest_checks():
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name} {detail}")
    return OK if ok else DOMAIN


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stgon", description="Stable h-gons and total stability conditions.")
    ap.add_argument("--version", action="version", version=f"stgon {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="type summary")
    p.add_argument("type", type=_type)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check", help="validity and stability of a polygon file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tost", help="charge, slicing, totality and gldim of a polygon file")
    p.add_argument("file")
    p.set_defaults(func=cmd_tost)

    p = sub.add_parser("gepner", help="write the Gepner polygon (and an SVG)")
    p.add_argument("type", type=_type)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--svg")
    p.add_argument("--size", type=int, default=512)
    p.set_defaults(func=cmd_gepner)

    p = sub.add_parser("sample", help="sampling statistics near the regular gon")
    p.add_argument("type", type=_type)
    p.add_argument("-n", type=int, default=100)
    p.add_argument("--mag", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("render", help="SVG drawing of a polygon file")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--layers", help=f"comma-separated subset of {','.join(LAYERS)}")
    p.add_argument("--tiling", type=int, default=0)
    p.add_argument("--size", type=int, default=512)
    p.add_argument("--far-end-panels", action="store_true",
                   help="D4 only: draw the three far-end hexagons of the file's charge")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("selftest", help="quick structural checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return IOERR if exc.code else OK
    if getattr(args, "command", None) == "sample" and args.n < 1:
        print("-n must be at least 1", file=sys.stderr)
        return IOERR
    try:
        return args.func(args)
    except (FileFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IOERR
    except (InvalidHGon, DegenerateHGon, DegenerateCharge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN


if __name__ == "__main__":
    sys.exit(main())
