"""Command-line surface: fold, dissect, verify, animate, bg, gen.

Exit codes: 0 success/accepted, 1 verification rejected, 2 invalid
input, 3 internal error.  Failure detail goes to stderr; reports go to
stdout.  Every artifact written here is verified before it is written.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chain import dissect_pair, fold_chain
from .equidecompose import (
    chart_to_json,
    overlay_charts,
    polygon_to_canonical_chart,
    verify_chart,
)
from .exact_geom import SimplePolygon, point_from_json, polygon_area, rat
from .figures import (
    Configuration,
    HdjError,
    HdjFile,
    NamedConfiguration,
    NamedTarget,
    load_hdj,
    save_hdj,
    verify_configuration,
)
from .kinematics import motion_report_json, sample_motion
from .polyomino import Polyomino, cells_from_json, parse_grid, random_polyomino, to_grid
from .render import RenderStyle, render_animation, render_chart, render_config

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3

CHART_TOLERANCE = 1e-9


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INVALID


def _load_polyomino(grid_path: str | None, cells_path: str | None) -> Polyomino:
    if (grid_path is None) == (cells_path is None):
        raise ValueError("give exactly one of --in/--cells")
    if grid_path is not None:
        with open(grid_path, "r", encoding="utf-8") as fh:
            return parse_grid(fh.read())
    with open(cells_path, "r", encoding="utf-8") as fh:
        return cells_from_json(json.load(fh))


def _fold_document(p: Polyomino) -> HdjFile:
    result = fold_chain(p)
    report = verify_configuration(result.figure, result.config, p)
    if not report.accepted:
        raise RuntimeError(f"fold failed self-verification: {report.failures}")
    return HdjFile(
        result.figure,
        [NamedConfiguration("fold", result.config)],
        [NamedTarget("target", "polyomino", p)],
        dict(result.cell_map),
    )


def cmd_fold(args) -> int:
    try:
        p = _load_polyomino(args.infile, args.cells)
        doc = _fold_document(p)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc))
    save_hdj(args.out, doc)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_config(doc.figure, doc.configurations[0].configuration,
                                   RenderStyle(show_hinges=True)))
    print(f"wrote {args.out}: {len(doc.figure.pieces)} pieces, verified exactly")
    return EXIT_OK


def cmd_dissect(args) -> int:
    try:
        with open(args.a, "r", encoding="utf-8") as fh:
            a = parse_grid(fh.read())
        with open(args.b, "r", encoding="utf-8") as fh:
            b = parse_grid(fh.read())
        hd = dissect_pair(a, b)
        for config, target in ((hd.config_a, a), (hd.config_b, b)):
            report = verify_configuration(hd.figure, config, target)
            if not report.accepted:
                raise RuntimeError(f"dissection failed self-verification: {report.failures}")
    except (ValueError, OSError) as exc:
        return _fail(str(exc))
    doc = HdjFile(
        hd.figure,
        [
            NamedConfiguration("fold_a", hd.config_a),
            NamedConfiguration("fold_b", hd.config_b),
        ],
        [
            NamedTarget("a", "polyomino", hd.target_a),
            NamedTarget("b", "polyomino", hd.target_b),
        ],
    )
    save_hdj(args.out, doc)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_config(doc.figure, hd.config_a, RenderStyle(show_hinges=True)))
    print(f"wrote {args.out}: {len(doc.figure.pieces)} pieces, both foldings verified")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = load_hdj(args.file)
        pairs = doc.pairs()
    except (HdjError, OSError, ValueError) as exc:
        return _fail(str(exc))
    all_ok = True
    for nc, nt in pairs:
        config = nc.configuration
        if args.mode is not None and args.mode != config.mode:
            config = Configuration(config.placements, args.mode, config.tolerance)
        if args.tol is not None:
            config = Configuration(config.placements, config.mode, args.tol)
        report = verify_configuration(doc.figure, config, nt.data)
        status = "ACCEPTED" if report.accepted else "REJECTED"
        print(f"configuration '{nc.name}' vs target '{nt.name}': {status}")
        for check, detail in report.failures:
            print(f"  {check}: {detail}")
            all_ok = False
        if not report.accepted:
            all_ok = False
    return EXIT_OK if all_ok else EXIT_REJECTED


def cmd_animate(args) -> int:
    try:
        doc = load_hdj(args.file)
        if len(doc.configurations) < 2:
            raise ValueError("animation needs a document with two configurations")
        if args.frames < 2:
            raise ValueError(f"need at least 2 frames, got {args.frames}")
        cut = args.cut
        if cut is not None and not (0 <= cut < len(doc.figure.pieces)):
            raise ValueError(f"cut hinge {cut} out of range")
        samples = sample_motion(
            doc.figure,
            doc.configurations[0].configuration,
            doc.configurations[1].configuration,
            args.frames,
            cut,
        )
    except (HdjError, OSError, ValueError) as exc:
        return _fail(str(exc))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_animation(samples, RenderStyle(), figure=doc.figure))
    if args.report_overlaps:
        with open(args.report_overlaps, "w", encoding="utf-8") as fh:
            json.dump(motion_report_json(samples), fh, indent=1)
            fh.write("\n")
    worst = max((o[2] for s in samples for o in s.overlaps), default=0.0)
    print(f"wrote {args.out}: {args.frames} frames, worst mid-motion overlap {worst:g}")
    return EXIT_OK


def _load_polygon_json(path: str) -> SimplePolygon:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, list):
        raise ValueError(f"{path}: expected a JSON array of [x, y] points")
    return SimplePolygon([point_from_json(v) for v in obj])


def cmd_bg(args) -> int:
    try:
        pa = _load_polygon_json(args.a)
        pb = _load_polygon_json(args.b)
        if polygon_area(pa) != polygon_area(pb):
            raise ValueError(
                f"areas differ: {polygon_area(pa)} vs {polygon_area(pb)}"
            )
        width = rat(args.width)
        chart_a = polygon_to_canonical_chart(pa, width)
        chart_b = polygon_to_canonical_chart(pb, width)
        mutual = overlay_charts(chart_a, chart_b)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc))
    report = verify_chart(mutual, CHART_TOLERANCE)
    if not report.accepted:
        print(f"error: mutual chart failed verification: {report.failures[:5]}",
              file=sys.stderr)
        return EXIT_REJECTED
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(chart_to_json(mutual), fh, indent=1)
        fh.write("\n")
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_chart(mutual, RenderStyle()))
    print(f"wrote {args.out}: {len(mutual.pieces)} pieces, verified at {CHART_TOLERANCE:g}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        p = random_polyomino(args.cells, args.seed)
    except ValueError as exc:
        return _fail(str(exc))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(to_grid(p) + "\n")
    print(f"wrote {args.out}: {p.cell_count} cells, seed {args.seed}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chainfold",
        description="Hinged dissections of polyominoes and classical "
        "polygon equidecomposition, with exact verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fold = sub.add_parser("fold", help="fold the triangle chain onto a polyomino")
    p_fold.add_argument("--in", dest="infile", help="ASCII grid file ('#' and '.')")
    p_fold.add_argument("--cells", help="JSON file {\"cells\": [[x,y],...]}")
    p_fold.add_argument("--out", required=True, help="output HDJ file")
    p_fold.add_argument("--svg", help="also render the folded configuration")
    p_fold.set_defaults(func=cmd_fold)

    p_dis = sub.add_parser("dissect", help="hinged dissection between two polyominoes")
    p_dis.add_argument("--a", required=True, help="first grid file")
    p_dis.add_argument("--b", required=True, help="second grid file")
    p_dis.add_argument("--out", required=True, help="output HDJ file")
    p_dis.add_argument("--svg", help="also render the first folding")
    p_dis.set_defaults(func=cmd_dissect)

    p_ver = sub.add_parser("verify", help="verify every configuration in an HDJ file")
    p_ver.add_argument("file", help="HDJ file")
    p_ver.add_argument("--mode", choices=("exact", "approx"), help="override stored modes")
    p_ver.add_argument("--tol", type=float, help="override tolerance (approx mode)")
    p_ver.set_defaults(func=cmd_verify)

    p_anim = sub.add_parser("animate", help="animate between two configurations")
    p_anim.add_argument("file", help="HDJ file with two configurations")
    p_anim.add_argument("--frames", type=int, default=60)
    p_anim.add_argument("--cut", type=int, help="hinge to open (default: last)")
    p_anim.add_argument("--out", required=True, help="output SVG file")
    p_anim.add_argument("--report-overlaps", help="write per-frame overlap JSON")
    p_anim.set_defaults(func=cmd_animate)

    p_bg = sub.add_parser("bg", help="mutual dissection of two equal-area polygons")
    p_bg.add_argument("--a", required=True, help="first polygon JSON ([[x,y],...])")
    p_bg.add_argument("--b", required=True, help="second polygon JSON")
    p_bg.add_argument("--width", default="1", help="common rectangle width (rational)")
    p_bg.add_argument("--out", required=True, help="output chart JSON")
    p_bg.add_argument("--svg", help="also render the chart side by side")
    p_bg.set_defaults(func=cmd_bg)

    p_gen = sub.add_parser("gen", help="generate a random polyomino grid")
    p_gen.add_argument("--cells", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True, help="output grid file")
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except Exception as exc:  # noqa: BLE001 - last-resort CLI guard
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
