"""Root-free inner-outer factorization and multiplicative denoising.

The factorization algorithm needs no root finding: from boundary samples
of an analytic, nonvanishing signal f it computes

    1.  g = log|f|,
    2.  h = g + i*H(g)        (analytic completion of the log-modulus),
    3.  outer = e^h,  inner = f / outer    pointwise on the grid.

The outer part then has |outer| = |f| on the circle, no disk zeros, and a
real positive mean, while the inner part is unimodular.  The construction
degrades when |f| dips toward zero (log|f| blows up), so a relative
modulus floor guards the entry and two stabilizing perturbations are
offered: adding a small constant, or subtracting the value of the
holomorphic extension at a point near the origin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import analytic_signal, hilbert_transform, holomorphic_project
from .errors import NearZeroModulusError, NonAnalyticInputError, StillDegenerateError
from .spectral import (
    NEGATIVE_ENERGY_TOL,
    BoundarySamples,
    SpectralSignal,
    evaluate_at,
    to_samples,
    to_spectrum,
)

#: Relative modulus floor below which log|f| amplifies noise beyond budget.
MODULUS_FLOOR = 1e-6


@dataclass(frozen=True)
class ConstantStabilizer:
    """Factorize f + c instead of f."""

    c: complex


@dataclass(frozen=True)
class ShiftStabilizer:
    """Factorize f - P_f(alpha), the extension value at a disk point alpha."""

    alpha: complex


Stabilizer = ConstantStabilizer | ShiftStabilizer


@dataclass(frozen=True, eq=False)
class Factorization:
    """Result of a root-free factorization f = inner * outer.

    ``inner`` is unimodular on the grid; ``outer`` is the one-sided
    spectrum of the outer part, truncated at M/8 coefficients by default
    with the discarded positive-frequency energy fraction reported in
    ``outer_tail_fraction``.  ``perturbation`` records the constant that a
    stabilizer added to the input (0 for a plain factorization).
    """

    inner: BoundarySamples
    outer: SpectralSignal
    outer_tail_fraction: float = 0.0
    perturbation: complex = 0j
    stabilizer: str | None = None

    @property
    def grid(self) -> int:
        return self.inner.m

    def outer_boundary(self) -> BoundarySamples:
        return to_samples(self.outer, self.inner.m)


def _check_modulus(values: np.ndarray, floor: float) -> None:
    mods = np.abs(values)
    peak = float(np.max(mods))
    k = int(np.argmin(mods))
    lo = float(mods[k])
    if peak == 0.0 or lo <= floor * peak:
        theta = 2.0 * np.pi * k / values.size
        raise NearZeroModulusError(
            f"min |f| = {lo:.3e} at theta = {theta:.6f} is below the relative floor "
            f"{floor:.1e}; consider stabilized_factorize with a constant or shift",
            min_modulus=lo,
            theta=theta,
        )


#: Aliasing probe threshold: relative energy allowed in the computed
#: outer part's negative-frequency bins before the working grid doubles.
_REFINE_ENERGY_TOL = 1e-26

#: Hard cap on internal refinement (working grid <= 64 * input grid).
_MAX_REFINE_FACTOR = 64


def weiss_factorize(
    s: BoundarySamples,
    *,
    outer_len: int | None = None,
    modulus_floor: float = MODULUS_FLOOR,
    analytic_tol: float = NEGATIVE_ENERGY_TOL,
) -> Factorization:
    """Split analytic boundary samples into unimodular * outer without roots.

    Preconditions: the signal is analytic (negative-frequency energy below
    ``analytic_tol``) and min|s| > modulus_floor * max|s|.

    When the signal has zeros just off the circle, log|f| decays slowly in
    frequency and the input grid may alias the construction.  The computed
    outer part self-reports that: its negative-frequency bins hold pure
    aliasing.  If the input is spectrally clean enough to upsample
    exactly, the factorization silently retries on doubled internal grids
    (bounded by 64x) until the probe is quiet, then returns values on the
    caller's grid; the fast path is bit-identical to a single-grid run.
    """
    m = s.m
    spec_in = np.fft.fft(s.values) / m
    total_in = float(np.sum(np.abs(spec_in) ** 2))
    neg_in = float(np.sum(np.abs(spec_in[m // 2 :]) ** 2))
    frac = 0.0 if total_in == 0.0 else neg_in / total_in
    if frac > analytic_tol:
        raise NonAnalyticInputError(
            f"negative-frequency energy fraction {frac:.3e} exceeds {analytic_tol:.1e}",
            fraction=frac,
        )
    _check_modulus(s.values, modulus_floor)

    if outer_len is None:
        outer_len = max(2, m // 8)

    # upsampling rewrites the signal as its one-sided interpolant, which is
    # only safe when the negative bins are numerically empty
    can_refine = total_in > 0.0 and neg_in <= 1e-20 * total_in

    k = m
    values = s.values
    previous = np.inf
    best = None
    while True:
        lo = float(np.min(np.abs(values)))
        if lo == 0.0 and best is not None:
            # a refined grid point landed on a boundary zero the coarse
            # grid missed; keep the last usable resolution
            break
        g = np.log(np.abs(values))
        h = g + 1j * hilbert_transform(g)
        outer_vals = np.exp(h)
        spec = np.fft.fft(outer_vals) / k
        total = float(np.sum(np.abs(spec) ** 2))
        aliased = float(np.sum(np.abs(spec[k // 2 :]) ** 2))
        best = (k, outer_vals, spec, total)
        if (
            not can_refine
            or total == 0.0
            or aliased <= _REFINE_ENERGY_TOL * total
            or k >= m * _MAX_REFINE_FACTOR
            # the per-doubling reduction factor squares with each doubling,
            # so only a near-total stall marks a zero the cap cannot reach
            or aliased > 0.98 * previous
        ):
            break
        previous = aliased
        k *= 2
        padded = np.zeros(k, dtype=np.complex128)
        padded[: m // 2] = spec_in[: m // 2]
        values = np.fft.ifft(padded) * k

    k, outer_vals, spec, total = best
    inner = BoundarySamples(s.values / outer_vals[:: k // m])

    kept = float(np.sum(np.abs(spec[:outer_len]) ** 2))
    positive = float(np.sum(np.abs(spec[: k // 2]) ** 2))
    tail = 0.0 if total == 0.0 else max(0.0, positive - kept) / total

    return Factorization(
        inner=inner,
        outer=SpectralSignal(spec[:outer_len]),
        outer_tail_fraction=tail,
    )


def stabilized_factorize(
    s: BoundarySamples,
    strategy: Stabilizer,
    *,
    outer_len: int | None = None,
    modulus_floor: float = MODULUS_FLOOR,
    analytic_tol: float = NEGATIVE_ENERGY_TOL,
) -> Factorization:
    """Apply a stabilizing perturbation, then factorize.

    constant(c) factorizes s + c; shift(alpha) factorizes
    s - P_s(alpha) where P_s(alpha) is the power-series value of the
    spectrum at alpha.  The applied perturbation is recorded on the
    result.  If the perturbed signal still violates the modulus floor the
    strategy has failed and StillDegenerateError is raised.
    """
    if isinstance(strategy, ConstantStabilizer):
        shift = complex(strategy.c)
        label = "constant"
    elif isinstance(strategy, ShiftStabilizer):
        alpha = complex(strategy.alpha)
        if abs(alpha) >= 1.0:
            raise ValueError("shift point must lie in the open unit disk")
        spectrum = to_spectrum(s, s.m // 2, tol=analytic_tol)
        shift = -evaluate_at(spectrum, alpha)
        label = "shift"
    else:
        raise TypeError(f"unknown stabilizer {strategy!r}")

    perturbed = BoundarySamples(s.values + shift)
    try:
        _check_modulus(perturbed.values, modulus_floor)
    except NearZeroModulusError as err:
        raise StillDegenerateError(
            f"{label} stabilizer left min |f| = {err.min_modulus:.3e} below the floor",
            min_modulus=err.min_modulus,
            theta=err.theta,
        ) from err

    fact = weiss_factorize(
        perturbed,
        outer_len=outer_len,
        modulus_floor=modulus_floor,
        analytic_tol=analytic_tol,
    )
    return Factorization(
        inner=fact.inner,
        outer=fact.outer,
        outer_tail_fraction=fact.outer_tail_fraction,
        perturbation=shift,
        stabilizer=label,
    )


def denoise(u, rounds: int) -> BoundarySamples:
    """Strip multiplicative amplitude noise by repeated renormalization.

    The real signal is complexified once (analytic signal); each round
    divides by the pointwise modulus and re-projects onto nonnegative
    frequencies.  The projection of a unimodular signal is not unimodular,
    which is why iterating helps; the modulus drifts back toward 1 while
    the dominant oscillation survives.
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    f = analytic_signal(u)
    m = f.m
    for _ in range(rounds):
        mods = np.abs(f.values)
        lo, hi = float(np.min(mods)), float(np.max(mods))
        if hi == 0.0 or lo <= 1e-12 * hi:
            raise NearZeroModulusError(
                f"signal modulus collapsed to {lo:.3e}; cannot renormalize",
                min_modulus=lo,
            )
        f = to_samples(holomorphic_project(BoundarySamples(f.values / mods)), m)
    return f
