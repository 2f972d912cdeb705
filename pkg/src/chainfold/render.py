"""Deterministic SVG output for configurations, charts, and sampled motions.

All coordinates are written with fixed 6-decimal formatting, so identical
inputs produce byte-identical documents.  Animations are declarative
(SMIL path morphing), no scripting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equidecompose import DissectionChart
from .figures import Configuration, CountMismatch, HingedFigure
from .kinematics import MotionSample, TooFewFrames
from .numeric import apply_numeric_points, float_polygon

DEFAULT_PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#59a14f",
    "#e15759",
    "#b07aa1",
    "#edc948",
    "#76b7b2",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)


@dataclass(frozen=True)
class RenderStyle:
    scale: float = 40.0
    palette: tuple[str, ...] = DEFAULT_PALETTE
    stroke_width: float = 0.02
    show_hinges: bool = False
    show_labels: bool = False

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if not self.palette:
            raise ValueError("palette must not be empty")

    def color(self, index: int) -> str:
        return self.palette[index % len(self.palette)]


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _path_d(points) -> str:
    coords = [f"{_fmt(x)},{_fmt(y)}" for x, y in points]
    return "M " + " L ".join(coords) + " Z"


def _bounds(point_lists):
    xs = [x for pts in point_lists for x, _ in pts]
    ys = [y for pts in point_lists for _, y in pts]
    return min(xs), min(ys), max(xs), max(ys)


def _svg_open(min_x, min_y, max_x, max_y, scale) -> list[str]:
    """Document header; the inner group flips y so +y points up."""
    span_x = max(max_x - min_x, 1e-9)
    span_y = max(max_y - min_y, 1e-9)
    margin_x = span_x * 0.05
    margin_y = span_y * 0.05
    vb_x = min_x - margin_x
    vb_y = -(max_y + margin_y)
    vb_w = span_x + 2 * margin_x
    vb_h = span_y + 2 * margin_y
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(vb_w * scale)}" height="{_fmt(vb_h * scale)}" '
        f'viewBox="{_fmt(vb_x)} {_fmt(vb_y)} {_fmt(vb_w)} {_fmt(vb_h)}">',
        '<g transform="scale(1,-1)">',
    ]


_SVG_CLOSE = ["</g>", "</svg>"]


def _placed_points(f: HingedFigure, c: Configuration):
    if len(c.placements) != len(f.pieces):
        raise CountMismatch(
            f"{len(c.placements)} placements for {len(f.pieces)} pieces"
        )
    placed = []
    for piece, m in zip(f.pieces, c.placements):
        cos, sin = float(m.rot_cos), float(m.rot_sin)
        tx, ty = float(m.translate.x), float(m.translate.y)
        placed.append(
            [
                (cos * float(v.x) - sin * float(v.y) + tx,
                 sin * float(v.x) + cos * float(v.y) + ty)
                for v in piece.vertices
            ]
        )
    return placed


def render_config(f: HingedFigure, c: Configuration, style: RenderStyle = RenderStyle()) -> str:
    """Static picture of one placed configuration, one path per piece."""
    placed = _placed_points(f, c)
    lines = _svg_open(*_bounds(placed), style.scale)
    for i, pts in enumerate(placed):
        lines.append(
            f'<path d="{_path_d(pts)}" fill="{style.color(i)}" '
            f'stroke="#222222" stroke-width="{_fmt(style.stroke_width)}"/>'
        )
    if style.show_hinges:
        for h in f.hinges:
            cos = float(c.placements[h.piece_a].rot_cos)
            sin = float(c.placements[h.piece_a].rot_sin)
            v = f.pieces[h.piece_a].vertices[h.vertex_a]
            x = cos * float(v.x) - sin * float(v.y) + float(c.placements[h.piece_a].translate.x)
            y = sin * float(v.x) + cos * float(v.y) + float(c.placements[h.piece_a].translate.y)
            lines.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(0.06)}" '
                'fill="#ffffff" stroke="#222222" '
                f'stroke-width="{_fmt(style.stroke_width)}"/>'
            )
    if style.show_labels:
        for i, pts in enumerate(placed):
            cx = sum(x for x, _ in pts) / len(pts)
            cy = sum(y for _, y in pts) / len(pts)
            lines.append(
                f'<text x="{_fmt(cx)}" y="{_fmt(-cy)}" font-size="0.2" '
                f'text-anchor="middle" transform="scale(1,-1)">{i}</text>'
            )
    lines.extend(_SVG_CLOSE)
    return "\n".join(lines) + "\n"


def render_animation(samples: list[MotionSample], style: RenderStyle = RenderStyle(),
                     figure: HingedFigure | None = None,
                     local_points: list | None = None) -> str:
    """Looping animation A -> B -> A over the sampled frames.

    Each piece is one path whose "d" attribute is morphed linearly
    between the per-frame placed outlines.
    """
    if len(samples) < 2:
        raise TooFewFrames(f"need at least 2 samples, got {len(samples)}")
    if local_points is None:
        if figure is None:
            raise ValueError("render_animation needs the figure or explicit local points")
        local_points = [float_polygon(p.as_tuples()) for p in figure.pieces]
    piece_count = len(samples[0].placements)
    frames = []
    for s in samples:
        if len(s.placements) != piece_count:
            raise CountMismatch("samples disagree on piece count")
        frames.append(
            [apply_numeric_points(m, pts) for m, pts in zip(s.placements, local_points)]
        )
    lines = _svg_open(*_bounds([pts for frame in frames for pts in frame]), style.scale)
    loop = frames + frames[-2::-1]  # forward then back, sharing the endpoints
    key_times = ";".join(_fmt(i / (len(loop) - 1)) for i in range(len(loop)))
    for i in range(piece_count):
        values = ";".join(_path_d(frame[i]) for frame in loop)
        lines.append(
            f'<path d="{_path_d(frames[0][i])}" fill="{style.color(i)}" '
            f'fill-opacity="0.85" stroke="#222222" stroke-width="{_fmt(style.stroke_width)}">'
        )
        lines.append(
            f'<animate attributeName="d" dur="8s" repeatCount="indefinite" '
            f'calcMode="linear" keyTimes="{key_times}" values="{values}"/>'
        )
        lines.append("</path>")
    lines.extend(_SVG_CLOSE)
    return "\n".join(lines) + "\n"


def render_chart(chart: DissectionChart, style: RenderStyle = RenderStyle()) -> str:
    """Source and target assemblies side by side with matching piece colors."""
    source_pts = [float_polygon(p.as_tuples()) for p in chart.pieces]
    placed_pts = [
        apply_numeric_points(m, pts)
        for pts, m in zip(source_pts, chart.target_motions)
    ]
    src_min_x, src_min_y, src_max_x, src_max_y = _bounds(
        source_pts + [float_polygon(chart.source.as_tuples())]
    )
    gap = max(src_max_x - src_min_x, 1e-9) * 0.15
    shift = src_max_x - src_min_x + gap
    shifted = [[(x + shift, y) for x, y in pts] for pts in placed_pts]
    everything = source_pts + shifted + [
        [(x + shift, y) for x, y in float_polygon(chart.target.as_tuples())]
    ]
    lines = _svg_open(*_bounds(everything), style.scale)
    lines.append('<g id="source">')
    for i, pts in enumerate(source_pts):
        lines.append(
            f'<path d="{_path_d(pts)}" fill="{style.color(i)}" '
            f'stroke="#222222" stroke-width="{_fmt(style.stroke_width)}"/>'
        )
    lines.append("</g>")
    lines.append(f'<g id="target" transform="translate({_fmt(shift)},0)">')
    for i, pts in enumerate(placed_pts):
        lines.append(
            f'<path d="{_path_d(pts)}" fill="{style.color(i)}" '
            f'stroke="#222222" stroke-width="{_fmt(style.stroke_width)}"/>'
        )
    lines.append("</g>")
    lines.extend(_SVG_CLOSE)
    return "\n".join(lines) + "\n"
