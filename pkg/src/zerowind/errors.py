"""Exception types shared across the package."""


class ZerowindError(Exception):
    """Base class for all package-specific failures."""


class AmbiguousClassification(ZerowindError):
    """Point-vs-curve classification did not converge at maximum refinement depth."""


class DetourFailed(ZerowindError):
    """No radius in the schedule produced a valid detour curve."""


class NoConvergence(ZerowindError):
    """A numerical iteration failed to reach its tolerance."""


class ZeroOnCurve(ZerowindError):
    """The function is (numerically) zero somewhere on the curve, but the operation requires it nonzero there."""


class NonIntegerWinding(ZerowindError):
    """The accumulated argument variation was not close enough to a whole number of turns."""


class ResolutionTooCoarse(ZerowindError):
    """The zero pattern kept changing between refinement levels up to the maximum resolution."""


class BoundaryCoefficientZero(ZerowindError):
    """Coefficient reversal needs nonzero constant and leading coefficients."""


class DegreeZero(ZerowindError):
    """The operation requires a non-constant polynomial."""


class SelfCheckFailed(ZerowindError):
    """Two independent computations of the same quantity disagreed."""
