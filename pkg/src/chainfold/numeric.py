"""Float-precision motions and polygon helpers for the tolerance-based paths.

Exact arithmetic is reserved for verification of end states; everything
that is irrational by nature (oblique rectangle alignment, hinge-angle
interpolation, overlay refinement) runs here in doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact_geom import (
    RigidMotion,
    _bbox,
    _bboxes_interiors_overlap,
    _convex_clip,
    _ear_clip,
    _is_convex,
    _signed_area2,
)


@dataclass(frozen=True)
class NumericMotion:
    """Rotation by angle_rad about the origin followed by a translation."""

    angle_rad: float
    tx: float
    ty: float


NUMERIC_IDENTITY = NumericMotion(0.0, 0.0, 0.0)


def apply_numeric(m: NumericMotion, p) -> tuple[float, float]:
    c = math.cos(m.angle_rad)
    s = math.sin(m.angle_rad)
    x, y = float(p[0]), float(p[1])
    return (c * x - s * y + m.tx, s * x + c * y + m.ty)


def apply_numeric_points(m: NumericMotion, pts) -> list[tuple[float, float]]:
    c = math.cos(m.angle_rad)
    s = math.sin(m.angle_rad)
    out = []
    for p in pts:
        x, y = float(p[0]), float(p[1])
        out.append((c * x - s * y + m.tx, s * x + c * y + m.ty))
    return out


def compose_numeric(outer: NumericMotion, inner: NumericMotion) -> NumericMotion:
    tx, ty = apply_numeric(outer, (inner.tx, inner.ty))
    return NumericMotion(outer.angle_rad + inner.angle_rad, tx, ty)


def invert_numeric(m: NumericMotion) -> NumericMotion:
    c = math.cos(m.angle_rad)
    s = math.sin(m.angle_rad)
    return NumericMotion(-m.angle_rad, -(c * m.tx + s * m.ty), -(-s * m.tx + c * m.ty))


def numeric_from_rigid(m: RigidMotion) -> NumericMotion:
    return NumericMotion(
        math.atan2(float(m.rot_sin), float(m.rot_cos)),
        float(m.translate.x),
        float(m.translate.y),
    )


def numeric_between_segments(a1, a2, b1, b2) -> NumericMotion:
    """Float motion mapping segment a1a2 onto b1b2 (lengths assumed equal)."""
    ang_a = math.atan2(a2[1] - a1[1], a2[0] - a1[0])
    ang_b = math.atan2(b2[1] - b1[1], b2[0] - b1[0])
    angle = ang_b - ang_a
    c, s = math.cos(angle), math.sin(angle)
    tx = b1[0] - (c * a1[0] - s * a1[1])
    ty = b1[1] - (s * a1[0] + c * a1[1])
    return NumericMotion(angle, tx, ty)


def wrap_angle(delta: float) -> float:
    """Normalize an angle difference to (-pi, pi]; half turns resolve to +pi."""
    d = math.fmod(delta, math.tau)
    if d > math.pi:
        d -= math.tau
    elif d <= -math.pi:
        d += math.tau
    return d


def float_polygon(pts) -> list[tuple[float, float]]:
    return [(float(p[0]), float(p[1])) for p in pts]


def float_area(pts) -> float:
    return float(_signed_area2(pts)) / 2.0


def float_triangles(pts) -> list[tuple]:
    """Triangulate a float ccw polygon; fan for convex, ear clipping otherwise."""
    if len(pts) == 3 or _is_convex(pts):
        return [(pts[0], pts[i], pts[i + 1]) for i in range(1, len(pts) - 1)]
    return _ear_clip(list(pts))


def float_convex_parts(pts) -> list[list]:
    """Decompose into convex parts: the polygon itself when convex, else
    its triangulation."""
    if len(pts) == 3 or _is_convex(pts):
        return [list(pts)]
    return [list(t) for t in _ear_clip(list(pts))]


def float_overlap_area(pts_a, pts_b) -> float:
    """Intersection area of two float ccw simple polygons."""
    if not _bboxes_interiors_overlap(_bbox(pts_a), _bbox(pts_b)):
        return 0.0
    total = 0.0
    tris_b = float_triangles(pts_b)
    for ta in float_triangles(pts_a):
        box_a = _bbox(ta)
        for tb in tris_b:
            if not _bboxes_interiors_overlap(box_a, _bbox(tb)):
                continue
            frag = _convex_clip(list(ta), list(tb))
            if frag:
                total += _signed_area2(frag) / 2.0
    return total
