import numpy as np
import pytest

from zerowind import (
    DetourFailed,
    Polynomial,
    build_detour,
    classify_point,
    classify_roots,
    default_epsilon_schedule,
    unit_circle,
)


class TestBuildDetour:
    def test_no_excisions_returns_base(self, circle_curve):
        det = build_detour(circle_curve, [])
        assert det.composite is circle_curve
        assert det.excised == ()

    def test_single_zero_moves_inside(self, circle_curve):
        det = build_detour(circle_curve, [1.0], eps_schedule=[0.1])
        assert classify_point(det.composite, 1.0).kind == "inside"
        assert det.excised == ((1.0, 0.1),)
        assert det.composite.signed_area() > 0

    def test_two_zeros_disjoint_discs(self, circle_curve):
        det = build_detour(circle_curve, [1.0, -1.0], eps_schedule=[0.1])
        assert len(det.excised) == 2
        for z, eps in det.excised:
            assert classify_point(det.composite, z).kind == "inside"
        (z1, e1), (z2, e2) = det.excised
        assert abs(z1 - z2) > e1 + e2

    def test_arc_span_matches_chord_geometry(self, circle_curve):
        # On the unit circle the splice arc spans pi + 2*arcsin(eps/2) exactly.
        for eps in (0.2, 0.1, 0.05):
            det = build_detour(circle_curve, [1.0], eps_schedule=[eps])
            assert det.arc_spans[0] == pytest.approx(np.pi + 2 * np.arcsin(eps / 2), abs=1e-9)

    def test_arc_excess_shrinks_with_radius(self, circle_curve):
        spans = [
            build_detour(circle_curve, [1.0], eps_schedule=[eps]).arc_spans[0]
            for eps in (0.2, 0.1, 0.05, 0.025)
        ]
        excess = [s - np.pi for s in spans]
        assert all(e > 0 for e in excess)
        assert all(a > b for a, b in zip(excess, excess[1:]))

    def test_zero_not_on_curve_rejected(self, circle_curve):
        with pytest.raises(ValueError):
            build_detour(circle_curve, [0.5])

    def test_overlapping_discs_exhaust_schedule(self, circle_curve):
        close_pair = [1.0, complex(np.exp(0.05j))]
        with pytest.raises(DetourFailed):
            build_detour(circle_curve, close_pair, eps_schedule=[0.5])

    def test_schedule_falls_back_to_smaller_radius(self, circle_curve):
        close_pair = [1.0, complex(np.exp(0.05j))]
        det = build_detour(circle_curve, close_pair, eps_schedule=[0.5, 0.01])
        assert det.excised[0][1] == 0.01

    def test_default_schedule_scales(self, circle_curve):
        sched = default_epsilon_schedule(circle_curve, [1.0, -1.0])
        scale = min(2.0, circle_curve.diameter)  # antipodal pair distance vs diameter
        assert sched[0] == pytest.approx(0.2 * scale)
        assert len(sched) == 21
        assert all(a > b for a, b in zip(sched, sched[1:]))


class TestDetourZeroSets:
    def test_inside_set_is_base_inside_plus_excised(self, circle_curve):
        # plant roots inside, on, and outside; the composite must swallow
        # exactly the on-curve ones extra
        f = Polynomial.from_roots([(0.3 + 0.2j, 1), (1j, 2), (1.7, 1)])
        report = classify_roots(f, circle_curve)
        assert (report.m, report.lam) == (1, 2)
        det = build_detour(circle_curve, report.on_curve.locations())
        composite_report = classify_roots(f, det.composite)
        assert composite_report.m == 3
        assert composite_report.lam == 0
        assert classify_point(det.composite, 1.7).kind == "outside"

    def test_composite_orientation_preserved(self, circle_curve):
        det = build_detour(circle_curve, [1.0, 1j, -1.0], eps_schedule=[0.15])
        assert det.composite.signed_area() > 0
        assert det.base.signed_area() > 0
