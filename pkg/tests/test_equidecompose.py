import random
from fractions import Fraction

import pytest

from chainfold.equidecompose import (
    BadWidth,
    DegenerateTriangle,
    DissectionChart,
    RectangleForm,
    TargetMismatch,
    WidthMismatch,
    chart_from_json,
    chart_to_json,
    overlay_charts,
    polygon_to_canonical_chart,
    rectangle_to_width,
    stack_rectangles,
    triangle_to_rectangle,
    verify_chart,
)
from chainfold.exact_geom import (
    IDENTITY_MOTION,
    apply_motion_polygon,
    interiors_overlap,
    overlap_area,
    point,
    polygon,
    polygon_area,
)
from chainfold.numeric import NumericMotion

UNIT_SQUARE = polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def assert_exact_partition(pieces, motions, region):
    """Pieces are disjoint, and their motion images partition the region."""
    total = sum((polygon_area(p) for p in pieces), Fraction(0))
    assert total == polygon_area(region)
    placed = [apply_motion_polygon(m, p) for p, m in zip(pieces, motions)]
    for i in range(len(placed)):
        for j in range(i + 1, len(placed)):
            assert not interiors_overlap(placed[i], placed[j])
    for q in placed:
        assert overlap_area(q, region) == polygon_area(q)


class TestTriangleToRectangle:
    def test_axis_parallel_base(self):
        tri = polygon([(0, 0), (2, 0), (1, 2)])
        pieces, rect, motions = triangle_to_rectangle(tri)
        assert len(pieces) == 3
        # the longest sides tie at squared length 5; lowest edge index wins
        assert rect.corners[0] == point(2, 0)
        assert rect.corners[1] == point(1, 2)
        assert_exact_partition(pieces, [IDENTITY_MOTION] * len(pieces), tri)
        assert_exact_partition(pieces, motions, rect.polygon())

    def test_oblique_rectangle_on_hypotenuse(self):
        tri = polygon([(0, 0), (2, 0), (0, 2)])
        pieces, rect, motions = triangle_to_rectangle(tri)
        u, v = rect.u, rect.v
        assert u.dot(v) == 0  # exact perpendicularity
        assert rect.area() == 2
        assert rect.corners[0] == point(2, 0)  # base is the hypotenuse
        assert_exact_partition(pieces, motions, rect.polygon())

    def test_right_triangle_bases_on_hypotenuse(self):
        # with a longest side as base the altitude foot is strictly
        # interior, so a right triangle still yields all three pieces
        tri = polygon([(0, 0), (1, 0), (0, 2)])
        pieces, rect, motions = triangle_to_rectangle(tri)
        assert len(pieces) == 3
        assert rect.corners[0] == point(1, 0)
        assert_exact_partition(pieces, motions, rect.polygon())

    def test_degenerate(self):
        with pytest.raises(DegenerateTriangle):
            triangle_to_rectangle([point(0, 0), point(1, 1), point(2, 2)])

    def test_longest_side_foot_in_closed_base(self):
        # taking a longest side as base always puts the altitude foot
        # inside the closed base segment
        rng = random.Random(11)
        for _ in range(60):
            pts = [
                point(rng.randrange(-8, 9), rng.randrange(-8, 9)) for _ in range(3)
            ]
            a, b, c = pts
            area2 = (b - a).cross(c - a)
            if area2 == 0:
                continue
            if area2 < 0:
                a, b = b, a
            side_sq = [(b - a).norm_sq(), (c - b).norm_sq(), (a - c).norm_sq()]
            base = max(range(3), key=lambda i: side_sq[i])
            pa, pb, pc = [(a, b, c), (b, c, a), (c, a, b)][base]
            t = (pc - pa).dot(pb - pa) / side_sq[base]
            assert 0 <= t <= 1
            pieces, rect, motions = triangle_to_rectangle(polygon(
                [v.as_tuple() for v in (a, b, c)]
            ))
            assert_exact_partition(pieces, motions, rect.polygon())


class TestRectangleToWidth:
    def test_one_doubling(self):
        pieces, motions, out = rectangle_to_width(RectangleForm.axis_aligned(1, 4), 2)
        assert len(pieces) == 2
        assert out.corners[2] == point(2, 2)
        report = verify_chart(
            DissectionChart(pieces, [IDENTITY_MOTION] * 2, motions,
                            polygon([(0, 0), (1, 0), (1, 4), (0, 4)]), out.polygon()),
            1e-9,
        )
        assert report.accepted

    def test_identity(self):
        pieces, motions, out = rectangle_to_width(RectangleForm.axis_aligned(2, 2), 2)
        assert len(pieces) == 1
        assert motions[0] == NumericMotion(0.0, 0.0, 0.0)

    def test_one_by_three_to_width_two(self):
        pieces, motions, out = rectangle_to_width(RectangleForm.axis_aligned(1, 3), 2)
        assert len(pieces) <= 4
        chart = DissectionChart(
            pieces, [IDENTITY_MOTION] * len(pieces), motions,
            polygon([(0, 0), (1, 0), (1, 3), (0, 3)]), out.polygon(),
        )
        assert out.corners[2] == point(2, Fraction(3, 2))
        assert verify_chart(chart, 1e-9).accepted

    def test_slide_case_verifies(self):
        # 3 x 1 to width 2: ratio 3/2, one slide, no halvings
        pieces, motions, out = rectangle_to_width(RectangleForm.axis_aligned(3, 1), 2)
        chart = DissectionChart(
            pieces, [IDENTITY_MOTION] * len(pieces), motions,
            polygon([(0, 0), (3, 0), (3, 1), (0, 1)]), out.polygon(),
        )
        assert verify_chart(chart, 1e-9).accepted
        total = sum((polygon_area(p) for p in pieces), Fraction(0))
        assert total == 3  # cuts are exact rational

    def test_oblique_rectangle(self):
        # rational corners, irrational side lengths
        rect = RectangleForm.from_corners(
            (point(0, 0), point(2, 1), point(1, 3), point(-1, 2))
        )
        pieces, motions, out = rectangle_to_width(rect, 1)
        chart = DissectionChart(
            pieces, [IDENTITY_MOTION] * len(pieces), motions,
            rect.polygon(), out.polygon(),
        )
        assert verify_chart(chart, 1e-9).accepted
        total = sum((polygon_area(p) for p in pieces), Fraction(0))
        assert total == rect.area()

    def test_bad_width(self):
        with pytest.raises(BadWidth):
            rectangle_to_width(RectangleForm.axis_aligned(1, 1), 0)


class TestStackRectangles:
    def test_two_rectangles(self):
        motions, total = stack_rectangles(
            [RectangleForm.axis_aligned(2, 1), RectangleForm.axis_aligned(2, 3)]
        )
        assert motions[0] == NumericMotion(0.0, 0.0, 0.0)
        assert motions[1] == NumericMotion(0.0, 0.0, 1.0)
        assert total.corners[2] == point(2, 4)

    def test_single(self):
        motions, total = stack_rectangles([RectangleForm.axis_aligned(2, 5)])
        assert motions == [NumericMotion(0.0, 0.0, 0.0)]
        assert total.corners[2] == point(2, 5)

    def test_mixed_widths(self):
        with pytest.raises(WidthMismatch):
            stack_rectangles(
                [RectangleForm.axis_aligned(2, 1), RectangleForm.axis_aligned(3, 1)]
            )


class TestCanonicalChart:
    def test_unit_square_identity_like(self):
        chart = polygon_to_canonical_chart(UNIT_SQUARE, 1)
        assert len(chart.pieces) == 1
        assert verify_chart(chart, 1e-9).accepted

    def test_triangle_to_2x2(self):
        tri = polygon([(0, 0), (4, 0), (0, 2)])
        chart = polygon_to_canonical_chart(tri, 2)
        assert chart.target == polygon([(0, 0), (2, 0), (2, 2), (0, 2)])
        assert verify_chart(chart, 1e-9).accepted
        total = sum((polygon_area(p) for p in chart.pieces), Fraction(0))
        assert total == 4  # source side is exact

    def test_l_hexagon(self):
        hexagon = polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
        chart = polygon_to_canonical_chart(hexagon, 1)
        assert verify_chart(chart, 1e-9).accepted

    def test_stage_conservation(self):
        tri = polygon([(0, 0), (5, 0), (2, 3)])
        pieces, rect, motions = triangle_to_rectangle(tri)
        assert rect.area() == polygon_area(tri)
        norm_pieces, _, out = rectangle_to_width(rect, 2)
        assert out.corners[2].x == 2
        total = sum((polygon_area(p) for p in norm_pieces), Fraction(0))
        assert total == rect.area()


class TestOverlay:
    def _half_charts(self):
        left = polygon([(0, 0), (Fraction(1, 2), 0), (Fraction(1, 2), 1), (0, 1)])
        right = polygon([(Fraction(1, 2), 0), (1, 0), (1, 1), (Fraction(1, 2), 1)])
        bottom = polygon([(0, 0), (1, 0), (1, Fraction(1, 2)), (0, Fraction(1, 2))])
        top = polygon([(0, Fraction(1, 2)), (1, Fraction(1, 2)), (1, 1), (0, 1)])
        zero = NumericMotion(0.0, 0.0, 0.0)
        ca = DissectionChart([left, right], [IDENTITY_MOTION] * 2, [zero, zero],
                             UNIT_SQUARE, UNIT_SQUARE)
        cb = DissectionChart([bottom, top], [IDENTITY_MOTION] * 2, [zero, zero],
                             UNIT_SQUARE, UNIT_SQUARE)
        return ca, cb

    def test_vertical_vs_horizontal_halves(self):
        ca, cb = self._half_charts()
        mutual = overlay_charts(ca, cb)
        assert len(mutual.pieces) == 4
        for p in mutual.pieces:
            assert abs(float(polygon_area(p)) - 0.25) < 1e-12
        assert verify_chart(mutual, 1e-9).accepted

    def test_identity_overlay_reproduces_pieces(self):
        ca, _ = self._half_charts()
        mutual = overlay_charts(ca, ca)
        assert len(mutual.pieces) == 2
        assert abs(sum(float(polygon_area(p)) for p in mutual.pieces) - 1.0) < 1e-9

    def test_square_vs_triangle_end_to_end(self):
        square = polygon([(0, 0), (2, 0), (2, 2), (0, 2)])
        tri = polygon([(0, 0), (4, 0), (0, 2)])
        ca = polygon_to_canonical_chart(square, 2)
        cb = polygon_to_canonical_chart(tri, 2)
        mutual = overlay_charts(ca, cb)
        assert len(mutual.pieces) <= len(ca.pieces) * len(cb.pieces) * 4
        report = verify_chart(mutual, 1e-9)
        assert report.accepted
        assert mutual.source == square
        assert mutual.target == tri

    def test_target_mismatch(self):
        ca, _ = self._half_charts()
        other = polygon_to_canonical_chart(polygon([(0, 0), (2, 0), (2, 2), (0, 2)]), 2)
        with pytest.raises(TargetMismatch):
            overlay_charts(ca, other)


class TestVerifyChart:
    def test_pipeline_chart_accepted(self):
        hexagon = polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
        chart = polygon_to_canonical_chart(hexagon, 1)
        assert verify_chart(chart, 1e-9).accepted

    def test_perturbed_motion_rejected(self):
        tri = polygon([(0, 0), (4, 0), (0, 2)])
        chart = polygon_to_canonical_chart(tri, 2)
        m = chart.target_motions[0]
        chart.target_motions[0] = NumericMotion(m.angle_rad, m.tx + 1e-3, m.ty)
        assert not verify_chart(chart, 1e-9).accepted

    def test_empty_pieces_rejected(self):
        chart = DissectionChart([], [], [], UNIT_SQUARE, UNIT_SQUARE)
        report = verify_chart(chart, 1e-9)
        assert not report.accepted
        assert "SourceArea" in report.failed_checks()

    def test_missing_piece_rejected(self):
        tri = polygon([(0, 0), (4, 0), (0, 2)])
        chart = polygon_to_canonical_chart(tri, 2)
        chart.pieces.pop()
        chart.target_motions.pop()
        assert not verify_chart(chart, 1e-9).accepted


class TestChartJson:
    def test_round_trip_exact(self):
        tri = polygon([(0, 0), (4, 0), (0, 2)])
        chart = polygon_to_canonical_chart(tri, 2)
        decoded = chart_from_json(chart_to_json(chart))
        assert decoded.source_exact
        assert decoded.pieces == chart.pieces
        assert decoded.target == chart.target
        assert verify_chart(decoded, 1e-9).accepted

    def test_round_trip_float(self):
        square = polygon([(0, 0), (2, 0), (2, 2), (0, 2)])
        tri = polygon([(0, 0), (4, 0), (0, 2)])
        mutual = overlay_charts(
            polygon_to_canonical_chart(square, 2), polygon_to_canonical_chart(tri, 2)
        )
        decoded = chart_from_json(chart_to_json(mutual))
        assert not decoded.source_exact
        assert verify_chart(decoded, 1e-9).accepted
