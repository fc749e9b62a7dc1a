"""Exception types shared across the package."""


class UnwindrError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidGridError(UnwindrError, ValueError):
    """Grid length is not a power of two, or is otherwise unusable."""


class AliasingError(UnwindrError, ValueError):
    """Requested sample grid is too short for the spectrum (M < N)."""


class GridMismatchError(UnwindrError, ValueError):
    """Two sampled signals live on incompatible grids."""


class NonAnalyticInputError(UnwindrError, ValueError):
    """Sampled signal carries negative-frequency energy above tolerance."""

    def __init__(self, message, fraction=None):
        super().__init__(message)
        self.fraction = fraction


class NearBoundaryRootError(UnwindrError, ValueError):
    """A Blaschke root lies inside the guard band around the unit circle."""


class BoundaryRootError(UnwindrError, ValueError):
    """A polynomial root lies inside the guard band around the unit circle,
    where inner/outer classification is numerically meaningless."""


class NearZeroModulusError(UnwindrError, ValueError):
    """Boundary modulus dips below the stability floor for log|f|.

    Carries the offending minimum modulus and grid angle so callers can
    decide on a stabilizing perturbation.
    """

    def __init__(self, message, min_modulus=None, theta=None):
        super().__init__(message)
        self.min_modulus = min_modulus
        self.theta = theta


class StillDegenerateError(NearZeroModulusError):
    """A stabilizing perturbation failed to lift the modulus floor."""


class PointOnCurveError(UnwindrError, ValueError):
    """Winding-number base point sits (numerically) on the curve."""


class UnderResolvedCurveError(UnwindrError, ValueError):
    """Sampled curve turns too fast between samples for a reliable
    winding count."""


class UnwindStepError(UnwindrError):
    """A factorization failed inside the unwinding iteration.

    ``step`` is the iteration index at which the failure occurred and
    ``partial`` holds the expansion built so far (may be None when the
    initial factorization fails).
    """

    def __init__(self, step, cause, partial=None):
        super().__init__(f"unwinding step {step}: {cause}")
        self.step = step
        self.cause = cause
        self.partial = partial
