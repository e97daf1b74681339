import numpy as np
import pytest

from zerowind import (
    AmbiguousClassification,
    ArcSegment,
    JordanCurve,
    LineSegment,
    TrigSegment,
    circle,
    classify_point,
    curve_from_alias,
    interior_angle,
    polygon,
    radial_trig_curve,
    sample,
    square,
    unit_circle,
)

from oracles import polygon_interior_angle

TWO_PI = 2 * np.pi


class TestSampling:
    def test_unit_circle_quarters(self, circle_curve):
        pts = [s.point for s in sample(circle_curve, 4)]
        for got, want in zip(pts, [1, 1j, -1, -1j]):
            assert got == pytest.approx(want, abs=1e-15)

    def test_square_eight_includes_corners(self, unit_square):
        pts = [s.point for s in sample(unit_square, 8)]
        corners = {c.location for c in unit_square.corners}
        hits = sum(any(abs(p - c) < 1e-12 for c in corners) for p in pts)
        assert hits == 4
        flags = [s.at_corner for s in sample(unit_square, 8)]
        assert sum(flags) == 4

    def test_closure_gap(self):
        curves = [
            unit_circle(),
            square(0.3 + 0.2j, 1.7),
            polygon([0, 2, 2 + 1j, 1 + 1j, 1 + 2j, 2j]),
            radial_trig_curve([(0.02, -0.01), (0.0, 0.015)]),
        ]
        for curve in curves:
            k = len(curve.segments)
            for i in range(k):
                gap = abs(complex(curve.segments[i].points(1.0)) - complex(curve.segments[(i + 1) % k].points(0.0)))
                assert gap < 1e-12
            # wrap evaluation is exact by construction
            assert abs(curve.point(0.0) - curve.point(1.0)) < 1e-12

    def test_sample_needs_three(self, circle_curve):
        with pytest.raises(ValueError):
            sample(circle_curve, 2)

    def test_tangent_is_global_derivative(self, circle_curve):
        s = sample(circle_curve, 16)[3]
        # d/dt exp(2 pi i t) = 2 pi i exp(2 pi i t)
        assert s.tangent == pytest.approx(TWO_PI * 1j * s.point, rel=1e-12)


class TestClassification:
    def test_circle_inside_outside(self, circle_curve):
        assert classify_point(circle_curve, 0, 1e-9).kind == "inside"
        assert classify_point(circle_curve, 2, 1e-9).kind == "outside"

    def test_circle_on_curve_parameter(self, circle_curve):
        loc = classify_point(circle_curve, np.exp(0.3j), 1e-9)
        assert loc.kind == "on-curve"
        assert loc.t == pytest.approx(0.3 / TWO_PI, abs=1e-9)

    def test_square_point_sides(self, unit_square):
        assert classify_point(unit_square, 0.2 + 0.1j).kind == "inside"
        assert classify_point(unit_square, 3 + 3j).kind == "outside"
        assert classify_point(unit_square, 1 + 0.37j).kind == "on-curve"

    def test_near_curve_point_is_ambiguous(self, circle_curve):
        with pytest.raises(AmbiguousClassification):
            classify_point(circle_curve, 1.0 + 2e-12, band=1e-12)

    def test_band_must_be_positive(self, circle_curve):
        with pytest.raises(ValueError):
            classify_point(circle_curve, 0.5, band=0.0)

    def test_random_points_against_modulus(self, circle_curve):
        rng = np.random.default_rng(0)
        for _ in range(200):
            r = rng.uniform(0.1, 2.0)
            if abs(r - 1.0) < 1e-3:
                continue
            z = r * np.exp(1j * rng.uniform(0, TWO_PI))
            want = "inside" if r < 1 else "outside"
            assert classify_point(circle_curve, z).kind == want


class TestInteriorAngle:
    def test_smooth_point_is_pi(self, circle_curve):
        for t in (0.0, 0.123, 0.75):
            assert interior_angle(circle_curve, t) == pytest.approx(np.pi, abs=1e-6)

    def test_square_corner(self, unit_square):
        for c in unit_square.corners:
            assert c.interior_angle == pytest.approx(np.pi / 2, abs=1e-12)
            assert interior_angle(unit_square, c.parameter) == c.interior_angle

    def test_lshape_against_exact_geometry(self, lshape):
        verts = [0, 2, 2 + 1j, 1 + 1j, 1 + 2j, 2j]
        by_location = {c.location: c.interior_angle for c in lshape.corners}
        assert len(by_location) == 6
        for i, v in enumerate(verts):
            want = polygon_interior_angle(verts, i)
            assert by_location[complex(v)] == pytest.approx(want, abs=1e-12)
        reflex = by_location[1 + 1j]
        assert reflex == pytest.approx(3 * np.pi / 2, abs=1e-12)

    def test_smooth_arc_line_joint(self):
        # stadium: two semicircles joined by two lines, tangents agree at joints
        stadium = JordanCurve.from_segments(
            [
                LineSegment(-1 - 1j, 1 - 1j),
                ArcSegment(1, 1.0, -np.pi / 2, np.pi / 2),
                LineSegment(1 + 1j, -1 + 1j),
                ArcSegment(-1, 1.0, np.pi / 2, 3 * np.pi / 2),
            ]
        )
        assert stadium.corners == ()


class TestConstruction:
    def test_clockwise_auto_reversed_with_warning(self):
        with pytest.warns(UserWarning):
            sq = polygon([0, 2j, 2 + 2j, 2])  # clockwise square
        assert sq.signed_area() > 0

    def test_clockwise_rejected_when_not_auto(self):
        segs = [LineSegment(0, 2j), LineSegment(2j, 2 + 2j), LineSegment(2 + 2j, 2), LineSegment(2, 0)]
        with pytest.raises(ValueError):
            JordanCurve.from_segments(segs, auto_orient=False)

    def test_open_chain_rejected(self):
        segs = [LineSegment(0, 1), LineSegment(1, 1 + 1j), LineSegment(1 + 1j, 0.5j)]
        with pytest.raises(ValueError):
            JordanCurve.from_segments(segs)

    def test_near_self_intersection_rejected(self):
        # bowtie-like hourglass pinched at the middle
        with pytest.raises(ValueError):
            polygon([0, 2, 1 + 0.0000000001j, 2 + 2j, 2j, 1 - 0.0000000001j])

    def test_degenerate_segment_rejected(self):
        with pytest.raises(ValueError):
            LineSegment(1 + 1j, 1 + 1j)
        with pytest.raises(ValueError):
            ArcSegment(0, -1.0, 0, 1)

    def test_breaks_proportional_to_length(self):
        rect = polygon([0, 3, 3 + 1j, 1j])
        widths = np.diff(rect.breaks)
        assert widths[0] == pytest.approx(3 / 8)
        assert widths[1] == pytest.approx(1 / 8)

    def test_trig_curve_matches_direct_evaluation(self):
        harmonics = [(0.03, -0.02), (-0.01, 0.02), (0.015, 0.0)]
        curve = radial_trig_curve(harmonics)
        t = np.linspace(0, 1, 257)
        theta = TWO_PI * t
        r = 1.0 + sum(
            a * np.cos(k * theta) + b * np.sin(k * theta) for k, (a, b) in enumerate(harmonics, start=1)
        )
        want = r * np.exp(1j * theta)
        got = curve.points(t)
        assert np.max(np.abs(got - want)) < 1e-12

    def test_trig_segment_reversal_is_pointwise_flip(self):
        seg = TrigSegment((0.1, 1.0, -0.3, 0.05, 0.2), (0.0, 0.4, 1.1), 0.3, 2.4)
        rev = seg.reversed()
        s = np.linspace(0, 1, 33)
        assert np.max(np.abs(rev.points(s) - seg.points(1.0 - s))) < 1e-12

    def test_segment_subdivision_consistency(self):
        seg = ArcSegment(0.5j, 2.0, 0.3, 2.9)
        sub = seg.subsegment(0.25, 0.75)
        s = np.linspace(0, 1, 17)
        assert np.max(np.abs(sub.points(s) - seg.points(0.25 + 0.5 * s))) < 1e-14


class TestAliases:
    def test_unit_circle_alias(self):
        c = curve_from_alias("unit-circle")
        assert abs(c.point(0.0) - 1.0) < 1e-15

    def test_circle_alias_forms(self):
        for text in ("circle(1+2j,0.5)", "circle(1, 2, 0.5)"):
            c = curve_from_alias(text)
            assert abs(c.point(0.0) - (1 + 2j + 0.5)) < 1e-12

    def test_square_alias(self):
        c = curve_from_alias("square(0j,2)")
        assert len(c.corners) == 4

    def test_unknown_alias(self):
        with pytest.raises(ValueError):
            curve_from_alias("pentagon(0,1)")

    def test_json_round_trip(self):
        for curve in (unit_circle(), square(0.1 + 0.2j, 1.3), radial_trig_curve([(0.02, 0.01)])):
            again = JordanCurve.from_json(curve.to_json())
            t = np.linspace(0, 1, 101)
            assert np.max(np.abs(again.points(t) - curve.points(t))) < 1e-12


class TestOrientationInvariants:
    def test_positive_signed_area(self):
        for curve in (unit_circle(), square(0, 2), circle(1 + 1j, 0.3)):
            assert curve.signed_area() > 0

    def test_circle_area_value(self, circle_curve):
        assert circle_curve.signed_area(1 << 14) == pytest.approx(np.pi, rel=1e-6)
