"""Randomized property harness.

Instances are built from planted factors, so the interior and boundary zero
counts are known exactly without trusting the root finder; the root finder
and the preimage counter are then validated against the plant.  Bound
failures are retried at higher resolution and tighter tolerances before being
recorded, and every confirmed failure is serialized for replay.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from .crossings import CrossingConfig, Line, count_preimages
from .curves import JordanCurve, polygon, radial_trig_curve, square, unit_circle
from .polynomials import Polynomial
from .verify import guarded_ceil

_FAMILIES = ("circle", "trig-perturbed", "square", "lshape")


@dataclass(frozen=True)
class HarnessConfig:
    trials: int = 100
    max_degree: int = 6
    curve_family: str = "circle"
    seed: int = 0

    def __post_init__(self):
        if self.curve_family not in _FAMILIES:
            raise ValueError(f"curve_family must be one of {_FAMILIES}")
        if self.trials < 1 or self.max_degree < 1:
            raise ValueError("trials and max_degree must be positive")

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "max_degree": self.max_degree,
            "curve_family": self.curve_family,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HarnessConfig":
        known = {"trials", "max_degree", "curve_family", "seed"}
        extra = set(obj) - known
        if extra:
            raise ValueError(f"unknown harness config keys: {sorted(extra)}")
        return cls(
            trials=int(obj.get("trials", 100)),
            max_degree=int(obj.get("max_degree", 6)),
            curve_family=str(obj.get("curve_family", "circle")),
            seed=int(obj.get("seed", 0)),
        )


@dataclass(frozen=True)
class PlantedInstance:
    """A polynomial with planted roots and the exact bound they imply."""

    polynomial: Polynomial
    curve: JordanCurve
    line: Line
    m: int
    lam: int
    bound: int  # 2m + sum ceil(lam_j alpha_j / pi); reduces to 2m + lam when smooth
    on_curve_params: tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "polynomial": self.polynomial.to_json(),
            "curve": self.curve.to_json(),
            "line": self.line.to_json(),
            "planted": {
                "m": self.m,
                "lambda": self.lam,
                "bound": self.bound,
                "on_curve_params": list(self.on_curve_params),
            },
        }


# ---------------------------------------------------------------------------
# curve families and planting sites


def _lshape_vertices(scale: float, shift: complex) -> list[complex]:
    base = [0 + 0j, 2 + 0j, 2 + 1j, 1 + 1j, 1 + 2j, 0 + 2j]
    return [shift + scale * v for v in base]


class _Family:
    """A curve plus site generators returning (point, interior_angle_or_None, param_or_None)."""

    def __init__(self, curve: JordanCurve, rng: np.random.Generator, kind: str, geom):
        self.curve = curve
        self.rng = rng
        self.kind = kind
        self.geom = geom

    def inside_point(self) -> complex:
        rng = self.rng
        if self.kind in ("circle", "trig-perturbed"):
            t = rng.integers(0, 720) / 720.0
            return complex((0.25 + 0.55 * rng.random()) * self.curve.point(t))
        if self.kind == "square":
            c, s = self.geom
            return c + complex(rng.uniform(-0.3, 0.3) * s, rng.uniform(-0.3, 0.3) * s)
        s, shift = self.geom
        cell = self.rng.choice(3)
        anchors = [0.5 + 0.5j, 1.5 + 0.5j, 0.5 + 1.5j]
        jitter = complex(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2))
        return shift + s * (anchors[cell] + jitter)

    def outside_point(self) -> complex:
        rng = self.rng
        if self.kind in ("circle", "trig-perturbed"):
            t = rng.integers(0, 720) / 720.0
            return complex((1.3 + 1.2 * rng.random()) * self.curve.point(t))
        if self.kind == "square":
            c, s = self.geom
            ang = rng.uniform(0.0, 2 * np.pi)
            return c + s * (1.0 + rng.uniform(0.2, 1.0)) * complex(np.cos(ang), np.sin(ang))
        s, shift = self.geom
        picks = [1.6 + 1.6j, -0.6 - 0.6j, 2.8 + 0.4j, 0.4 + 2.8j, 1.4 + 1.8j]
        base = picks[rng.choice(len(picks))]
        return shift + s * (base + complex(rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)))

    def boundary_site(self) -> tuple[complex, float, float]:
        """(point on the curve, exact interior angle there, curve parameter)."""
        rng = self.rng
        if self.kind in ("circle", "trig-perturbed"):
            t = rng.integers(0, 720) / 720.0
            return complex(self.curve.point(t)), np.pi, float(t)
        # polygon families: choose a corner or an edge point
        corners = self.curve.corners
        if rng.random() < 0.5:
            c = corners[rng.choice(len(corners))]
            return c.location, c.interior_angle, c.parameter
        k = len(self.curve.segments)
        i = int(rng.choice(k))
        frac = rng.integers(2, 9) / 10.0  # interior of the edge, rational offset
        br = self.curve.breaks
        t = br[i] + frac * (br[i + 1] - br[i])
        return complex(self.curve.point(t)), np.pi, float(t)


def _make_family(kind: str, rng: np.random.Generator) -> _Family:
    if kind == "circle":
        return _Family(unit_circle(), rng, kind, None)
    if kind == "trig-perturbed":
        harmonics = [(rng.uniform(-0.03, 0.03), rng.uniform(-0.03, 0.03)) for _ in range(3)]
        return _Family(radial_trig_curve(harmonics), rng, kind, None)
    if kind == "square":
        c = complex(rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25))
        s = rng.uniform(1.4, 2.2)
        return _Family(square(c, s), rng, kind, (c, s))
    if kind == "lshape":
        s = rng.uniform(0.6, 1.1)
        shift = complex(rng.uniform(-0.2, 0.2) - s, rng.uniform(-0.2, 0.2) - s)
        return _Family(polygon(_lshape_vertices(s, shift)), rng, kind, (s, shift))
    raise ValueError(kind)


def random_instance(
    rng: np.random.Generator,
    cfg: HarnessConfig,
    min_on_curve: int = 0,
    max_multiplicity: int = 3,
    separation: float = 0.2,
) -> PlantedInstance:
    """Plant factors on a random curve of the configured family.

    Each root's side of the curve is known by construction (interior sites are
    drawn well inside, exterior sites well outside, boundary sites exactly on
    the curve), so m, lam, and the corner bound are exact ground truth.
    """
    family = _make_family(cfg.curve_family, rng)
    degree = int(rng.integers(1, cfg.max_degree + 1))

    for _attempt in range(200):
        placed: list[tuple[complex, int, str, float | None, float | None]] = []
        total = 0
        need_on = min_on_curve
        while total < degree:
            mult = int(min(degree - total, rng.choice([1, 1, 1, 1, 2, 2, 3]), max_multiplicity))
            if need_on > 0:
                region = "on"
            else:
                region = str(rng.choice(["inside", "on", "outside"], p=[0.4, 0.3, 0.3]))
            if region == "inside":
                z, alpha, t = family.inside_point(), None, None
            elif region == "outside":
                z, alpha, t = family.outside_point(), None, None
            else:
                z, alpha, t = family.boundary_site()
                need_on -= 1
            placed.append((z, mult, region, alpha, t))
            total += mult
        locs = [p[0] for p in placed]
        if all(abs(locs[i] - locs[j]) >= separation for i in range(len(locs)) for j in range(i + 1, len(locs))):
            break
    else:
        raise RuntimeError("could not place separated roots")

    lead = rng.uniform(0.6, 1.8) * np.exp(1j * rng.uniform(0.0, 2 * np.pi))
    f = Polynomial.from_roots([(z, mult) for z, mult, _, _, _ in placed], leading=lead)

    m = sum(mult for _, mult, region, _, _ in placed if region == "inside")
    lam = 0
    corner_sum = 0
    on_params = []
    for _, mult, region, alpha, t in placed:
        if region != "on":
            continue
        lam += mult
        corner_sum += guarded_ceil(mult * alpha / np.pi)
        on_params.append(float(t))

    return PlantedInstance(
        polynomial=f,
        curve=family.curve,
        line=Line(rng.uniform(0.0, np.pi)),
        m=m,
        lam=lam,
        bound=2 * m + corner_sum,
        on_curve_params=tuple(on_params),
    )


# ---------------------------------------------------------------------------
# running trials


@dataclass(frozen=True)
class HarnessReport:
    config: HarnessConfig
    trials: int
    violations: tuple[dict, ...]
    min_slack: int
    reruns: int

    @property
    def all_hold(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "trials": self.trials,
            "violations": list(self.violations),
            "min_slack": self.min_slack,
            "reruns": self.reruns,
            "all_hold": self.all_hold,
        }


def measure_instance(inst: PlantedInstance, cross_cfg: CrossingConfig | None = None) -> int:
    """Distinct line preimages, letting the counter classify roots on its own."""
    cfg = cross_cfg if cross_cfg is not None else CrossingConfig()
    return count_preimages(inst.polynomial, inst.curve, inst.line, cfg).count


def run_harness(cfg: HarnessConfig, cross_cfg: CrossingConfig | None = None, min_on_curve: int = 0) -> HarnessReport:
    rng = np.random.default_rng(cfg.seed)
    base_cfg = cross_cfg if cross_cfg is not None else CrossingConfig()
    violations: list[dict] = []
    min_slack = None
    reruns = 0
    for _ in range(cfg.trials):
        inst = random_instance(rng, cfg, min_on_curve=min_on_curve)
        measured = measure_instance(inst, base_cfg)
        if measured < inst.bound:
            reruns += 1
            measured = measure_instance(inst, base_cfg.tightened())
            if measured < inst.bound:
                violations.append({"instance": inst.to_json(), "measured": measured, "bound": inst.bound})
        slack = measured - inst.bound
        min_slack = slack if min_slack is None else min(min_slack, slack)
    return HarnessReport(
        config=cfg,
        trials=cfg.trials,
        violations=tuple(violations),
        min_slack=int(min_slack if min_slack is not None else 0),
        reruns=reruns,
    )


def replay(instance_json: dict, cross_cfg: CrossingConfig | None = None) -> dict:
    """Re-run a serialized instance; returns the verdict for round-trip checks."""
    f = Polynomial.from_json(instance_json["polynomial"])
    curve = JordanCurve.from_json(instance_json["curve"])
    line = Line.from_json(instance_json["line"])
    planted = instance_json["planted"]
    cfg = cross_cfg if cross_cfg is not None else CrossingConfig()
    measured = count_preimages(f, curve, line, cfg).count
    return {
        "measured": measured,
        "bound": int(planted["bound"]),
        "holds": measured >= int(planted["bound"]),
    }


def save_replay(instance_json: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_json, fh, indent=2, sort_keys=True)
