"""Zero counting and line-preimage counting for polynomials along Jordan curves.

The library counts polynomial zeros inside and on a closed curve, counts the
distinct curve points whose image lands on a line through the origin, builds
detour curves that move boundary zeros strictly inside, and verifies the
lower bounds tying these quantities together (2m + lambda on smooth curves,
an interior-angle ceiling sum on cornered ones, and the paired cosine-sum
bound Z_P + Z_Q >= 2n on the unit circle).
"""

from .crossings import (
    CrossingConfig,
    Line,
    PreimagePoint,
    PreimageSet,
    arg_derivative_probe,
    count_disc_preimages,
    count_preimages,
    line_residual,
)
from .curves import (
    ArcSegment,
    CornerInfo,
    CurveSample,
    DetourCurve,
    JordanCurve,
    LineSegment,
    PointLocation,
    TrigSegment,
    build_detour,
    circle,
    classify_point,
    curve_from_alias,
    default_epsilon_schedule,
    interior_angle,
    polygon,
    radial_trig_curve,
    sample,
    square,
    trig_curve_from_complex_fourier,
    unit_circle,
)
from .errors import (
    AmbiguousClassification,
    BoundaryCoefficientZero,
    DegreeZero,
    DetourFailed,
    NoConvergence,
    NonIntegerWinding,
    ResolutionTooCoarse,
    SelfCheckFailed,
    ZeroOnCurve,
    ZerowindError,
)
from .harness import (
    HarnessConfig,
    HarnessReport,
    PlantedInstance,
    measure_instance,
    random_instance,
    replay,
    run_harness,
)
from .polynomials import (
    Polynomial,
    Root,
    RootSet,
    ZeroReport,
    classify_roots,
    find_roots,
    logderiv_integral,
    vanishing_order,
    winding_count,
)
from .verify import (
    BoundReport,
    CornerTerm,
    DetourReport,
    TrigReport,
    reverse_poly,
    trig_zero_count,
    verify_detour,
    verify_main,
    verify_piecewise,
    verify_trig,
)

__version__ = "0.1.0"

__all__ = [
    "ArcSegment",
    "AmbiguousClassification",
    "BoundReport",
    "BoundaryCoefficientZero",
    "CornerInfo",
    "CornerTerm",
    "CrossingConfig",
    "CurveSample",
    "DegreeZero",
    "DetourCurve",
    "DetourFailed",
    "DetourReport",
    "HarnessConfig",
    "HarnessReport",
    "JordanCurve",
    "Line",
    "LineSegment",
    "NoConvergence",
    "NonIntegerWinding",
    "PlantedInstance",
    "PointLocation",
    "Polynomial",
    "PreimagePoint",
    "PreimageSet",
    "ResolutionTooCoarse",
    "Root",
    "RootSet",
    "SelfCheckFailed",
    "TrigReport",
    "TrigSegment",
    "ZeroOnCurve",
    "ZeroReport",
    "ZerowindError",
    "arg_derivative_probe",
    "build_detour",
    "circle",
    "classify_point",
    "classify_roots",
    "count_disc_preimages",
    "count_preimages",
    "curve_from_alias",
    "default_epsilon_schedule",
    "find_roots",
    "interior_angle",
    "line_residual",
    "logderiv_integral",
    "measure_instance",
    "polygon",
    "radial_trig_curve",
    "random_instance",
    "replay",
    "reverse_poly",
    "run_harness",
    "sample",
    "square",
    "trig_curve_from_complex_fourier",
    "trig_zero_count",
    "unit_circle",
    "vanishing_order",
    "verify_detour",
    "verify_main",
    "verify_piecewise",
    "verify_trig",
    "winding_count",
]
