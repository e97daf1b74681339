"""Piecewise-smooth Jordan curves.

A curve is an ordered chain of parametric segments (circular arcs, straight
segments, trigonometric-series arcs) glued end to end and traversed
counterclockwise over a global parameter t in [0, 1).  Each segment is C^1
with nonvanishing derivative on its closed subinterval, so the curve is
piecewise smooth with one-sided tangents at the joints.

Besides representation the module provides point classification against a
curve (inside / outside / on the curve), interior angles at corners, and the
detour construction: given points sitting on the curve, reroute the curve
around each of them along the outer arc of a small disc so that the marked
points end up strictly inside the new curve.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from ._numeric import (
    TWO_PI,
    WindingNotResolved,
    adaptive_winding,
    bisect_zero,
    golden_min,
    trig_series,
    trig_series_deriv,
    wrap_angle,
)
from .errors import AmbiguousClassification, DetourFailed

# Tangent-direction jump (radians) above which a joint counts as a corner.
CORNER_TOL = 1e-6

# On-curve band, as a fraction of the curve diameter.
DEFAULT_BAND_FACTOR = 1e-9


# ---------------------------------------------------------------------------
# segments


@dataclass(frozen=True)
class ArcSegment:
    """Circular arc, swept from angle0 to angle1 (negative sweep = clockwise)."""

    center: complex
    radius: float
    angle0: float
    angle1: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise ValueError("arc radius must be positive")
        if self.angle0 == self.angle1:
            raise ValueError("arc sweep must be nonzero")

    def points(self, s):
        ang = self.angle0 + np.asarray(s, dtype=float) * (self.angle1 - self.angle0)
        return self.center + self.radius * np.exp(1j * ang)

    def derivs(self, s):
        sweep = self.angle1 - self.angle0
        ang = self.angle0 + np.asarray(s, dtype=float) * sweep
        return 1j * sweep * self.radius * np.exp(1j * ang)

    def subsegment(self, s0, s1):
        sweep = self.angle1 - self.angle0
        return ArcSegment(self.center, self.radius, self.angle0 + s0 * sweep, self.angle0 + s1 * sweep)

    def reversed(self):
        return ArcSegment(self.center, self.radius, self.angle1, self.angle0)

    def rough_length(self):
        return abs(self.angle1 - self.angle0) * self.radius

    def to_json(self):
        return {
            "kind": "arc",
            "center": [self.center.real, self.center.imag],
            "radius": self.radius,
            "from": self.angle0,
            "to": self.angle1,
        }


@dataclass(frozen=True)
class LineSegment:
    """Straight segment between two distinct points."""

    start_point: complex
    end_point: complex

    def __post_init__(self):
        if self.start_point == self.end_point:
            raise ValueError("line segment endpoints must be distinct")

    def points(self, s):
        return self.start_point + np.asarray(s, dtype=float) * (self.end_point - self.start_point)

    def derivs(self, s):
        s = np.asarray(s, dtype=float)
        return np.full(s.shape, self.end_point - self.start_point)

    def subsegment(self, s0, s1):
        d = self.end_point - self.start_point
        return LineSegment(self.start_point + s0 * d, self.start_point + s1 * d)

    def reversed(self):
        return LineSegment(self.end_point, self.start_point)

    def rough_length(self):
        return abs(self.end_point - self.start_point)

    def to_json(self):
        return {
            "kind": "line",
            "from": [self.start_point.real, self.start_point.imag],
            "to": [self.end_point.real, self.end_point.imag],
        }


@dataclass(frozen=True)
class TrigSegment:
    """x(t) + i y(t) with x, y finite cosine/sine series, t on [theta0, theta1].

    Coefficients are packed flat as [c0, a1, b1, a2, b2, ...], meaning
    c0 + sum_k (a_k cos(k t) + b_k sin(k t)).
    """

    coeffs_x: tuple[float, ...]
    coeffs_y: tuple[float, ...]
    theta0: float
    theta1: float

    def __post_init__(self):
        object.__setattr__(self, "coeffs_x", tuple(float(c) for c in self.coeffs_x))
        object.__setattr__(self, "coeffs_y", tuple(float(c) for c in self.coeffs_y))
        if not self.coeffs_x or not self.coeffs_y:
            raise ValueError("trig segment needs at least constant coefficients")
        if self.theta0 == self.theta1:
            raise ValueError("trig segment parameter interval must be nondegenerate")

    def _theta(self, s):
        return self.theta0 + np.asarray(s, dtype=float) * (self.theta1 - self.theta0)

    def points(self, s):
        th = self._theta(s)
        return trig_series(self.coeffs_x, th) + 1j * trig_series(self.coeffs_y, th)

    def derivs(self, s):
        th = self._theta(s)
        span = self.theta1 - self.theta0
        return span * (trig_series_deriv(self.coeffs_x, th) + 1j * trig_series_deriv(self.coeffs_y, th))

    def subsegment(self, s0, s1):
        span = self.theta1 - self.theta0
        return TrigSegment(self.coeffs_x, self.coeffs_y, self.theta0 + s0 * span, self.theta0 + s1 * span)

    def reversed(self):
        # Substituting t -> (theta0 + theta1) - t keeps both series in the
        # cosine/sine basis, so a reversed trig segment is again a trig segment.
        c = self.theta0 + self.theta1

        def flip(coeffs):
            out = [coeffs[0]]
            for k in range(1, len(coeffs) // 2 + 1):
                a = coeffs[2 * k - 1]
                b = coeffs[2 * k] if 2 * k < len(coeffs) else 0.0
                out.append(a * np.cos(k * c) + b * np.sin(k * c))
                out.append(a * np.sin(k * c) - b * np.cos(k * c))
            return tuple(out)

        return TrigSegment(flip(self.coeffs_x), flip(self.coeffs_y), self.theta0, self.theta1)

    def rough_length(self):
        s = np.linspace(0.0, 1.0, 65)
        speed = np.abs(self.derivs(s))
        return float((speed[0] / 2 + speed[1:-1].sum() + speed[-1] / 2) / (len(s) - 1))

    def to_json(self):
        return {
            "kind": "trig",
            "coeffs_x": list(self.coeffs_x),
            "coeffs_y": list(self.coeffs_y),
            "t0": self.theta0,
            "t1": self.theta1,
        }


Segment = Union[ArcSegment, LineSegment, TrigSegment]


def _segment_start(seg) -> complex:
    return complex(seg.points(0.0))


def _segment_end(seg) -> complex:
    return complex(seg.points(1.0))


def segment_from_json(obj: dict) -> Segment:
    kind = obj.get("kind")
    if kind == "arc":
        return ArcSegment(complex(*obj["center"]), float(obj["radius"]), float(obj["from"]), float(obj["to"]))
    if kind == "line":
        return LineSegment(complex(*obj["from"]), complex(*obj["to"]))
    if kind == "trig":
        return TrigSegment(tuple(obj["coeffs_x"]), tuple(obj["coeffs_y"]), float(obj["t0"]), float(obj["t1"]))
    raise ValueError(f"unknown segment kind: {kind!r}")


# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class CornerInfo:
    """A parameter where the one-sided tangents disagree.

    ``interior_angle`` is the angle of the curve's interior at the corner,
    in (0, 2*pi); it equals pi exactly when the curve is smooth there.
    """

    parameter: float
    location: complex
    interior_angle: float


@dataclass(frozen=True, eq=False)
class JordanCurve:
    """A closed, positively oriented, piecewise-smooth curve.

    The global parameter domain [0, 1) is split among the segments in
    proportion to their approximate arclengths (``breaks`` holds the split
    points, starting at 0.0 and ending at 1.0).
    """

    segments: tuple[Segment, ...]
    breaks: tuple[float, ...]
    corners: tuple[CornerInfo, ...]
    diameter: float

    # -- construction -------------------------------------------------

    @classmethod
    def from_segments(
        cls,
        segments: Iterable[Segment],
        *,
        auto_orient: bool = True,
        check_simple: bool = True,
        band: float | None = None,
    ) -> "JordanCurve":
        segs = tuple(segments)
        if not segs:
            raise ValueError("a curve needs at least one segment")

        probe = np.concatenate([s.points(np.linspace(0.0, 1.0, 64)) for s in segs])
        diameter = float(np.max(np.abs(probe[:, None] - probe[None, :])))
        if diameter <= 0.0:
            raise ValueError("degenerate curve")
        closure_tol = 1e-9 * diameter

        k = len(segs)
        for i in range(k):
            gap = abs(_segment_end(segs[i]) - _segment_start(segs[(i + 1) % k]))
            if gap > closure_tol:
                raise ValueError(f"segments {i} and {(i + 1) % k} do not join (gap {gap:.3g})")

        curve = cls(segs, cls._breaks_for(segs), (), diameter)
        if curve.signed_area() <= 0.0:
            if not auto_orient:
                raise ValueError("curve is clockwise")
            warnings.warn("clockwise curve reversed to counterclockwise orientation", stacklevel=2)
            segs = tuple(s.reversed() for s in reversed(segs))
            curve = cls(segs, cls._breaks_for(segs), (), diameter)

        curve = cls(curve.segments, curve.breaks, _find_corners(curve), diameter)
        if check_simple:
            _check_simple(curve, band if band is not None else DEFAULT_BAND_FACTOR * diameter)
        return curve

    @staticmethod
    def _breaks_for(segs: tuple[Segment, ...]) -> tuple[float, ...]:
        lengths = np.array([max(s.rough_length(), 1e-300) for s in segs])
        cum = np.concatenate([[0.0], np.cumsum(lengths)]) / lengths.sum()
        cum[-1] = 1.0
        return tuple(cum)

    # -- evaluation ----------------------------------------------------

    def _dispatch(self, t, per_segment):
        ts = np.asarray(t, dtype=float)
        scalar = ts.ndim == 0
        ts = np.atleast_1d(ts) % 1.0
        br = np.asarray(self.breaks)
        idx = np.clip(np.searchsorted(br, ts, side="right") - 1, 0, len(self.segments) - 1)
        out = np.empty(ts.shape, dtype=complex)
        for i, seg in enumerate(self.segments):
            mask = idx == i
            if mask.any():
                width = br[i + 1] - br[i]
                out[mask] = per_segment(seg, (ts[mask] - br[i]) / width, width)
        return out[0] if scalar else out

    def points(self, t):
        """Curve points at global parameter(s) t (wrapped modulo 1)."""
        return self._dispatch(t, lambda seg, s, w: seg.points(s))

    def derivs(self, t):
        """d(curve)/dt at global parameter(s) t; one-sided from the right at joints."""
        return self._dispatch(t, lambda seg, s, w: seg.derivs(s) / w)

    def point(self, t) -> complex:
        return complex(self.points(float(t)))

    def deriv(self, t) -> complex:
        return complex(self.derivs(float(t)))

    # -- global quantities ----------------------------------------------

    def signed_area(self, n: int = 4096) -> float:
        pts = self.points(np.arange(n) / n)
        x, y = pts.real, pts.imag
        return float(0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    def default_band(self) -> float:
        return DEFAULT_BAND_FACTOR * self.diameter

    def corner_parameters(self) -> tuple[float, ...]:
        return tuple(c.parameter for c in self.corners)

    def to_json(self) -> dict:
        return {"segments": [s.to_json() for s in self.segments]}

    @classmethod
    def from_json(cls, obj) -> "JordanCurve":
        if isinstance(obj, str):
            return curve_from_alias(obj)
        return cls.from_segments(segment_from_json(s) for s in obj["segments"])


def _find_corners(curve: JordanCurve) -> tuple[CornerInfo, ...]:
    segs = curve.segments
    k = len(segs)
    corners = []
    for i in range(k):
        incoming = complex(segs[i - 1].derivs(1.0))
        outgoing = complex(segs[i].derivs(0.0))
        turn = float(wrap_angle(np.angle(outgoing) - np.angle(incoming)))
        if abs(turn) <= CORNER_TOL:
            continue
        interior = np.pi - turn
        if not 0.0 < interior < TWO_PI:
            raise ValueError(f"cusp at segment joint {i} (turn {turn:.6f} rad)")
        corners.append(CornerInfo(curve.breaks[i], _segment_start(segs[i]), interior))
    return tuple(corners)


def _check_simple(curve: JordanCurve, band: float, per_segment: int = 96) -> None:
    """Desk-scale simplicity test: samples of non-adjacent segments must stay apart."""
    k = len(curve.segments)
    if k < 3:
        return
    s = np.linspace(0.0, 1.0, per_segment)
    samples = [seg.points(s) for seg in curve.segments]
    for i in range(k):
        for j in range(i + 1, k):
            if (j - i) % k in (1, k - 1):
                continue
            dmin = np.min(np.abs(samples[i][:, None] - samples[j][None, :]))
            if dmin < band:
                raise ValueError(f"curve nearly self-intersects (segments {i} and {j}, distance {dmin:.3g})")


# ---------------------------------------------------------------------------
# common shapes


def unit_circle() -> JordanCurve:
    """The unit circle with canonical parameterization t -> exp(2*pi*i*t)."""
    return JordanCurve.from_segments([ArcSegment(0.0, 1.0, 0.0, TWO_PI)])


def circle(center: complex, radius: float) -> JordanCurve:
    return JordanCurve.from_segments([ArcSegment(complex(center), float(radius), 0.0, TWO_PI)])


def polygon(vertices: Sequence[complex]) -> JordanCurve:
    verts = [complex(v) for v in vertices]
    if len(verts) < 3:
        raise ValueError("a polygon needs at least three vertices")
    return JordanCurve.from_segments(
        LineSegment(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))
    )


def square(center: complex, side: float) -> JordanCurve:
    c, h = complex(center), float(side) / 2.0
    return polygon([c + complex(-h, -h), c + complex(h, -h), c + complex(h, h), c + complex(-h, h)])


def trig_curve_from_complex_fourier(coeffs: dict[int, complex]) -> JordanCurve:
    """Closed curve z(t) = sum_m c_m exp(i m t), t in [0, 2*pi), from complex coefficients."""
    kmax = max(abs(m) for m in coeffs)
    ax = np.zeros(kmax + 1)
    bx = np.zeros(kmax + 1)
    ay = np.zeros(kmax + 1)
    by = np.zeros(kmax + 1)
    for m, c in coeffs.items():
        c = complex(c)
        h = abs(m)
        if m == 0:
            ax[0] += c.real
            ay[0] += c.imag
            continue
        sign = 1.0 if m > 0 else -1.0
        # Re(c e^{imt}) = Re(c) cos(ht) - sign*Im(c) sin(ht); Im likewise.
        ax[h] += c.real
        bx[h] -= sign * c.imag
        ay[h] += c.imag
        by[h] += sign * c.real

    def pack(const, a, b):
        out = [const]
        for k in range(1, kmax + 1):
            out.extend([a[k], b[k]])
        return tuple(out)

    seg = TrigSegment(pack(ax[0], ax, bx), pack(ay[0], ay, by), 0.0, TWO_PI)
    return JordanCurve.from_segments([seg])


def radial_trig_curve(harmonics: Sequence[tuple[float, float]], base_radius: float = 1.0) -> JordanCurve:
    """Closed smooth curve r(t)*exp(i t) with r(t) = base + sum_k (a_k cos kt + b_k sin kt).

    ``harmonics`` lists (a_k, b_k) starting at k = 1.  The perturbation must
    keep r positive and the derivative nonvanishing, which holds whenever
    sum_k (1 + k)*(|a_k| + |b_k|) < base_radius.
    """
    # r(t) e^{it} in complex Fourier form: radial harmonic k contributes
    # (a_k -+ i b_k)/2 at frequencies k+1 and -(k-1).
    coeffs: dict[int, complex] = {1: complex(base_radius)}
    for k, (a, b) in enumerate(harmonics, start=1):
        for freq, c in ((k + 1, (a - 1j * b) / 2.0), (-(k - 1), (a + 1j * b) / 2.0)):
            coeffs[freq] = coeffs.get(freq, 0.0) + c
    return trig_curve_from_complex_fourier(coeffs)


def curve_from_alias(alias: str) -> JordanCurve:
    """Parse "unit-circle", "circle(c,r)", "square(c,s)" curve shorthands."""
    text = alias.strip()
    if text == "unit-circle":
        return unit_circle()
    for name, builder in (("circle", circle), ("square", square)):
        if text.startswith(name + "(") and text.endswith(")"):
            inner = text[len(name) + 1 : -1]
            parts = [p.strip() for p in inner.split(",")]
            if len(parts) == 2:
                return builder(complex(parts[0]), float(parts[1]))
            if len(parts) == 3:
                return builder(complex(float(parts[0]), float(parts[1])), float(parts[2]))
            raise ValueError(f"cannot parse curve alias {alias!r}")
    raise ValueError(f"unknown curve alias {alias!r}")


# ---------------------------------------------------------------------------
# sampling and classification


@dataclass(frozen=True)
class CurveSample:
    t: float
    point: complex
    tangent: complex
    at_corner: bool


def sample(curve: JordanCurve, n: int) -> list[CurveSample]:
    """n samples at equispaced parameters with global-parameter tangents.

    Tangents at corner parameters are one-sided (from the right) and flagged.
    """
    if n < 3:
        raise ValueError("need at least three samples")
    ts = np.arange(n) / n
    pts = curve.points(ts)
    tans = curve.derivs(ts)
    corner_params = np.array(curve.corner_parameters())
    out = []
    for t, p, d in zip(ts, pts, tans):
        at_corner = bool(corner_params.size) and bool(
            np.min(np.abs(wrap_angle((corner_params - t) * TWO_PI))) < 1e-12 * TWO_PI
        )
        out.append(CurveSample(float(t), complex(p), complex(d), at_corner))
    return out


@dataclass(frozen=True)
class PointLocation:
    kind: str  # "inside" | "outside" | "on-curve"
    t: float | None = None  # nearest parameter, set for on-curve points


def nearest_parameter(curve: JordanCurve, p: complex, coarse: int | None = None) -> tuple[float, float]:
    """Parameter of the curve point closest to p (coarse scan + golden refine)."""
    n = coarse or max(2048, 512 * len(curve.segments))
    ts = np.arange(n) / n
    d = np.abs(curve.points(ts) - p)
    i = int(np.argmin(d))
    lo, hi = ts[i] - 1.5 / n, ts[i] + 1.5 / n
    tstar = float(golden_min(lambda q: np.abs(curve.points(q) - p), np.array([lo]), np.array([hi]))[0]) % 1.0
    return tstar, abs(curve.point(tstar) - p)


def classify_point(curve: JordanCurve, p: complex, band: float | None = None) -> PointLocation:
    """Locate p relative to the curve: on it (within ``band``), inside, or outside.

    Inside/outside is decided by the discrete winding number of the curve
    around p, refined until every argument step is below pi/2.
    """
    band = curve.default_band() if band is None else float(band)
    if band <= 0.0:
        raise ValueError("band must be positive")
    p = complex(p)
    tstar, dist = nearest_parameter(curve, p)
    if dist < band:
        return PointLocation("on-curve", tstar)
    try:
        turns, _, _ = adaptive_winding(lambda ts: curve.points(ts) - p)
    except WindingNotResolved as exc:
        raise AmbiguousClassification(f"winding around {p} did not converge: {exc}") from exc
    w = round(turns)
    if abs(turns - w) > 0.01 or w not in (0, 1):
        raise AmbiguousClassification(f"winding around {p} is {turns:.6f}")
    return PointLocation("inside" if w == 1 else "outside")


def interior_angle(curve: JordanCurve, t: float, snap_tol: float = 1e-7) -> float:
    """Interior angle at parameter t: pi at smooth points, the corner angle at corners."""
    t = float(t) % 1.0
    for c in curve.corners:
        gap = abs(t - c.parameter)
        if min(gap, 1.0 - gap) < snap_tol:
            return c.interior_angle
    return np.pi


# ---------------------------------------------------------------------------
# detour construction


@dataclass(frozen=True)
class DetourCurve:
    """A curve rerouted around marked boundary points.

    ``composite`` follows ``base`` except inside discs around the excised
    points, where it follows the disc boundary arc lying outside the base
    curve; every excised point is strictly inside the composite.
    ``arc_spans`` holds the angular length of each splice arc (these approach
    pi as the disc radius shrinks on a smooth curve).
    """

    base: JordanCurve
    excised: tuple[tuple[complex, float], ...]
    composite: JordanCurve
    arc_spans: tuple[float, ...]


def default_epsilon_schedule(curve: JordanCurve, zeros: Sequence[complex], k_max: int = 20) -> tuple[float, ...]:
    """Geometric radius schedule 0.2 * 2^-k * (min of pairwise zero distances and curve diameter)."""
    zs = [complex(z) for z in zeros]
    dists = [abs(a - b) for i, a in enumerate(zs) for b in zs[i + 1 :]]
    scale = min(dists + [curve.diameter])
    return tuple(0.2 * scale * 0.5**k for k in range(k_max + 1))


def _subsegment_span(curve: JordanCurve, t0: float, t1: float) -> list[Segment]:
    """Forward sub-chain of the curve covering global parameters t0 -> t1 (t1 > t0)."""
    pieces: list[Segment] = []
    br = np.asarray(curve.breaks)
    k = len(curve.segments)
    t = t0
    guard = 0
    while t < t1 - 1e-14:
        guard += 1
        if guard > 4 * (k + 2) * (int(t1 - t0) + 1):
            raise RuntimeError("subsegment walk failed to advance")
        u = t % 1.0
        i = min(int(np.searchsorted(br, u, side="right") - 1), k - 1)
        seg_end_global = float(br[i + 1]) + np.floor(t - u)
        stop = min(t1, seg_end_global)
        width = br[i + 1] - br[i]
        s0 = (u - br[i]) / width
        s1 = s0 + (stop - t) / width
        if s1 - s0 > 1e-12:
            pieces.append(curve.segments[i].subsegment(float(s0), float(min(s1, 1.0))))
        t = stop
    return pieces


def _forward_gap(a: float, b: float) -> float:
    return (b - a) % 1.0


def _try_detour(curve: JordanCurve, marks: list[tuple[float, complex]], eps: float, band: float):
    zs = [z for _, z in marks]
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if abs(zs[i] - zs[j]) <= 2.2 * eps:
                return None

    n = 8192
    ts = np.arange(n) / n
    pts = curve.points(ts)

    intervals = []
    for tj, zj in marks:
        g = np.abs(pts - zj) - eps
        sgn = np.sign(g)
        flips = np.nonzero(sgn * np.roll(sgn, -1) < 0)[0]
        if len(flips) != 2:
            return None

        def gfn(q, _z=zj):
            return np.abs(curve.points(q) - _z) - eps

        roots = bisect_zero(gfn, ts[flips], ts[flips] + 1.0 / n)
        u, v = float(roots[0]) % 1.0, float(roots[1]) % 1.0
        if not _forward_gap(u, tj % 1.0) <= _forward_gap(u, v):
            u, v = v, u
        mid = (u + 0.5 * _forward_gap(u, v)) % 1.0
        if float(gfn(np.array([mid]))[0]) >= 0.0:
            return None
        intervals.append((u, v, zj))

    intervals.sort(key=lambda iv: iv[0])

    segs: list[Segment] = []
    spans: list[float] = []
    for idx, (u, v, zj) in enumerate(intervals):
        a = curve.point(u)
        b = curve.point(v)
        th_a = float(np.angle(a - zj))
        th_b = float(np.angle(b - zj))
        sweep_ccw = (th_b - th_a) % TWO_PI
        chosen = []
        for sweep in (sweep_ccw, sweep_ccw - TWO_PI):
            if abs(sweep) < 1e-9:
                continue
            midpt = zj + eps * np.exp(1j * (th_a + 0.5 * sweep))
            try:
                loc = classify_point(curve, midpt, band)
            except AmbiguousClassification:
                return None
            if loc.kind == "outside":
                chosen.append(ArcSegment(zj, eps, th_a, th_a + sweep))
        if len(chosen) != 1:
            return None
        segs.append(chosen[0])
        spans.append(abs(chosen[0].angle1 - chosen[0].angle0))

        next_u = intervals[(idx + 1) % len(intervals)][0]
        gap = _forward_gap(v, next_u)
        if gap < 1e-9:
            return None
        segs.extend(_subsegment_span(curve, v, v + gap))

    try:
        composite = JordanCurve.from_segments(segs, auto_orient=False, check_simple=True, band=band)
    except ValueError:
        return None

    for _, _, zj in intervals:
        try:
            if classify_point(composite, zj, band).kind != "inside":
                return None
        except AmbiguousClassification:
            return None

    ordered = tuple((zj, eps) for _, _, zj in intervals)
    return DetourCurve(curve, ordered, composite, tuple(spans))


def build_detour(
    curve: JordanCurve,
    zeros_on_curve: Sequence[complex],
    eps_schedule: Sequence[float] | None = None,
    band: float | None = None,
) -> DetourCurve:
    """Reroute the curve around each listed on-curve point.

    Tries each radius in the schedule until the discs are pairwise disjoint,
    each disc boundary crosses the curve exactly twice, and the spliced curve
    is closed, simple at sample resolution, positively oriented, and strictly
    encloses every listed point.  Raises DetourFailed when the schedule is
    exhausted.
    """
    band = curve.default_band() if band is None else float(band)
    zs = [complex(z) for z in zeros_on_curve]
    if not zs:
        return DetourCurve(curve, (), curve, ())

    marks = []
    for z in zs:
        loc = classify_point(curve, z, band)
        if loc.kind != "on-curve":
            raise ValueError(f"{z} does not lie on the curve within band {band:.3g}")
        marks.append((loc.t, z))

    schedule = tuple(eps_schedule) if eps_schedule is not None else default_epsilon_schedule(curve, zs)
    if not schedule:
        raise ValueError("empty radius schedule")
    for eps in schedule:
        if eps <= 0.0:
            raise ValueError("detour radii must be positive")
        result = _try_detour(curve, marks, float(eps), band)
        if result is not None:
            return result
    raise DetourFailed(f"no radius in the schedule produced a valid detour (tried {len(schedule)})")
