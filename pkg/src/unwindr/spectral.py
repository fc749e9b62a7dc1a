"""Core signal containers, conversions, weighted norms, and curve geometry.

Signals live in two twin representations: a one-sided Fourier coefficient
vector (`SpectralSignal`, holomorphic by construction) and complex samples
on a uniform power-of-two grid of the unit circle (`BoundarySamples`).
All boundary derivatives are spectral (multiply coefficient n by ``i*n``);
all circle integrals use the trapezoid rule on the uniform grid, which is
spectrally accurate for smooth periodic integrands.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AliasingError,
    GridMismatchError,
    InvalidGridError,
    NonAnalyticInputError,
    PointOnCurveError,
    UnderResolvedCurveError,
)

#: Default relative tolerance on negative-frequency energy in `to_spectrum`.
NEGATIVE_ENERGY_TOL = 1e-8

#: Default minimum distance from the winding base point to the curve.
WINDING_POINT_TOL = 1e-9


def is_power_of_two(m: int) -> bool:
    return m >= 1 and (m & (m - 1)) == 0


def default_grid(n: int) -> int:
    """Default oversampled grid size for an N-coefficient signal.

    At least 1024 and at least 8*N, rounded up to a power of two, so that
    pointwise nonlinear operations (log, exp, products) alias below 1e-10
    for the signal classes this package targets.
    """
    m = 1024
    while m < 8 * n:
        m *= 2
    return m


@dataclass(frozen=True, eq=False)
class SpectralSignal:
    """One-sided Fourier coefficients a_0..a_{N-1} of sum a_n e^{int}.

    Only nonnegative frequencies exist; the represented function extends
    holomorphically to the unit disk.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficient vector must be 1-D and nonempty")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficient vector must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def n(self) -> int:
        return self.coeffs.size


@dataclass(frozen=True, eq=False)
class BoundarySamples:
    """Complex values on the uniform circle grid theta_k = 2*pi*k/M."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.values, dtype=np.complex128))
        if arr.ndim != 1:
            raise ValueError("sample vector must be 1-D")
        if not is_power_of_two(arr.size):
            raise InvalidGridError(f"grid size {arr.size} is not a power of two")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def m(self) -> int:
        return self.values.size

    @property
    def theta(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.m) / self.m


@dataclass(frozen=True)
class GammaWeights:
    """Nondecreasing weight sequence gamma_0 <= gamma_1 <= ... with gamma_0 = 0.

    Defines the X-norm ``sum gamma_n |a_n|^2``; the companion Y-(semi)norm
    uses first differences gamma_{n+1} - gamma_n.  Explicit sequences are
    extended past their end by their final value (so the Y-weights vanish
    there).
    """

    kind: str
    exponent: float | None = None
    table: tuple[float, ...] | None = None

    _KINDS = ("dirichlet", "h1", "sobolev", "explicit")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.kind == "sobolev":
            if self.exponent is None or not self.exponent > 0:
                raise ValueError("sobolev weights need a smoothness s > 0")
        if self.kind == "explicit":
            if not self.table:
                raise ValueError("explicit weights need at least one value")
            v = np.asarray(self.table, dtype=float)
            if not np.all(np.isfinite(v)):
                raise ValueError("explicit weights must be finite")
            if v[0] != 0.0:
                raise ValueError("gamma_0 must be 0")
            if np.any(np.diff(v) < 0):
                raise ValueError("weights must be nondecreasing")

    @classmethod
    def dirichlet(cls) -> "GammaWeights":
        """gamma_n = n; the Y-norm is then the plain l2 coefficient norm."""
        return cls("dirichlet")

    @classmethod
    def h1(cls) -> "GammaWeights":
        """gamma_n = n^2 (boundary H^1 scale)."""
        return cls("h1")

    @classmethod
    def sobolev(cls, s: float) -> "GammaWeights":
        """gamma_n = n^{2s} for a smoothness parameter s > 0."""
        return cls("sobolev", exponent=float(s))

    @classmethod
    def explicit(cls, values) -> "GammaWeights":
        return cls("explicit", table=tuple(float(v) for v in values))

    def weights(self, n: int) -> np.ndarray:
        """gamma_0 .. gamma_{n-1} as a float vector."""
        idx = np.arange(n, dtype=float)
        if self.kind == "dirichlet":
            return idx
        if self.kind == "h1":
            return idx * idx
        if self.kind == "sobolev":
            out = np.zeros(n)
            out[1:] = idx[1:] ** (2.0 * self.exponent)
            return out
        v = np.asarray(self.table, dtype=float)
        if n <= v.size:
            return v[:n].copy()
        return np.concatenate([v, np.full(n - v.size, v[-1])])

    def diff_weights(self, n: int) -> np.ndarray:
        """gamma_{k+1} - gamma_k for k = 0..n-1."""
        return np.diff(self.weights(n + 1))


def to_samples(f: SpectralSignal, m: int) -> BoundarySamples:
    """Evaluate the signal on the uniform M-point circle grid.

    Exact for trigonometric polynomials of degree < M.
    """
    if not is_power_of_two(m):
        raise InvalidGridError(f"grid size {m} is not a power of two")
    if m < f.n:
        raise AliasingError(f"grid size {m} cannot carry {f.n} coefficients")
    padded = np.zeros(m, dtype=np.complex128)
    padded[: f.n] = f.coeffs
    return BoundarySamples(np.fft.ifft(padded) * m)


def negative_energy_fraction(s: BoundarySamples) -> float:
    """Fraction of spectral energy in bins not representable one-sided.

    Counts the strictly negative frequencies plus the Nyquist bin, which is
    ambiguous in a one-sided representation.
    """
    spec = np.fft.fft(s.values)
    total = float(np.sum(np.abs(spec) ** 2))
    if total == 0.0:
        return 0.0
    bad = float(np.sum(np.abs(spec[s.m // 2 :]) ** 2))
    return bad / total


def to_spectrum(s: BoundarySamples, n: int, *, tol: float = NEGATIVE_ENERGY_TOL) -> SpectralSignal:
    """Leading N one-sided Fourier coefficients of an analytic sample vector.

    Positive-frequency energy beyond bin N-1 is silently truncated; callers
    that care can measure it via the two-sided transform.  Raises
    NonAnalyticInputError when the relative energy in negative-frequency
    bins (Nyquist included) exceeds ``tol``.
    """
    if not 1 <= n <= s.m // 2:
        raise InvalidGridError(f"one-sided length {n} must be in 1..{s.m // 2}")
    frac = negative_energy_fraction(s)
    if frac > tol:
        raise NonAnalyticInputError(
            f"negative-frequency energy fraction {frac:.3e} exceeds {tol:.1e}",
            fraction=frac,
        )
    spec = np.fft.fft(s.values) / s.m
    return SpectralSignal(spec[:n])


def norm_x(f: SpectralSignal, gamma: GammaWeights) -> float:
    """Weighted coefficient norm sqrt(sum gamma_n |a_n|^2).

    Adding a constant to the signal never changes the value (gamma_0 = 0).
    """
    w = gamma.weights(f.n)
    return float(np.sqrt(np.sum(w * np.abs(f.coeffs) ** 2)))


def norm_y(f: SpectralSignal, gamma: GammaWeights) -> float:
    """Difference-weighted seminorm sqrt(sum (gamma_{n+1}-gamma_n) |a_n|^2).

    For dirichlet weights this is the plain l2 norm of the coefficients.
    """
    d = gamma.diff_weights(f.n)
    return float(np.sqrt(np.sum(d * np.abs(f.coeffs) ** 2)))


def l2_norm(f: SpectralSignal) -> float:
    """Boundary L2 norm sqrt(integral |f|^2 dtheta) = sqrt(2 pi sum |a_n|^2)."""
    return float(np.sqrt(2.0 * np.pi) * np.linalg.norm(f.coeffs))


def inner_product(a: BoundarySamples, b: BoundarySamples) -> complex:
    """Trapezoid quadrature of the boundary inner product integral(conj(a) b) dt."""
    if a.m != b.m:
        raise GridMismatchError(f"grid sizes differ: {a.m} vs {b.m}")
    return complex((2.0 * np.pi / a.m) * np.vdot(a.values, b.values))


def evaluate_at(f: SpectralSignal, z: complex) -> complex:
    """Power-series value sum a_n z^n of the holomorphic extension, |z| < 1."""
    return complex(np.polynomial.polynomial.polyval(z, f.coeffs))


def dirichlet_energy(f: SpectralSignal) -> float:
    """Disk energy integral_D |F'|^2 = pi * sum n |a_n|^2."""
    n = np.arange(f.n, dtype=float)
    return float(np.pi * np.sum(n * np.abs(f.coeffs) ** 2))


def differentiate(s: BoundarySamples) -> BoundarySamples:
    """Spectral d/dtheta of a sampled curve (two-sided; Nyquist bin zeroed)."""
    freqs = np.fft.fftfreq(s.m, d=1.0 / s.m)
    spec = np.fft.fft(s.values) * (1j * freqs)
    spec[s.m // 2] = 0.0
    return BoundarySamples(np.fft.ifft(spec))


def winding_area(s: BoundarySamples) -> float:
    """Winding-number-weighted area 0.5 * integral(x y' - x' y) dt of the curve.

    Equals the disk Dirichlet energy when the samples come from a function
    holomorphic in the disk.
    """
    ds = differentiate(s).values
    x, y = s.values.real, s.values.imag
    integrand = x * ds.imag - ds.real * y
    return float(0.5 * (2.0 * np.pi / s.m) * np.sum(integrand))


def winding_number(
    s: BoundarySamples,
    z0: complex = 0j,
    *,
    point_tol: float = WINDING_POINT_TOL,
    residual_tol: float = 0.1,
) -> int:
    """Winding number of the sampled curve around z0 by phase-increment summation.

    The discrete method demands a resolved curve: every consecutive-point
    phase step must stay below pi, and the summed increments must land
    within ``residual_tol`` of an integer multiple of 2*pi.  Violations
    raise UnderResolvedCurveError; a base point within ``point_tol`` of the
    curve raises PointOnCurveError.
    """
    w = s.values - z0
    if float(np.min(np.abs(w))) <= point_tol:
        raise PointOnCurveError(f"base point {z0} lies on the sampled curve")
    steps = np.angle(np.roll(w, -1) / w)
    if np.any(np.abs(steps) >= np.pi * (1.0 - 1e-12)):
        raise UnderResolvedCurveError("a single phase step reaches pi; refine the grid")
    total = float(np.sum(steps)) / (2.0 * np.pi)
    k = round(total)
    if abs(total - k) >= residual_tol:
        raise UnderResolvedCurveError(
            f"phase-increment sum {total:.6f} is not close to an integer"
        )
    return int(k)
