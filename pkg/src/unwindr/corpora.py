"""Deterministic test-signal generators shared by the verification suites,
the CLI, and the demos.

Everything here is seed-driven through `numpy.random.Generator`, so a
fixed seed reproduces the exact corpus byte for byte.
"""

from __future__ import annotations

import numpy as np

from .analytic import holomorphic_project
from .blaschke import BlaschkeProduct, poly_from_roots
from .spectral import BoundarySamples, SpectralSignal, to_samples


def _normalized(coeffs: np.ndarray, m: int = 256) -> SpectralSignal:
    """Scale so the max boundary modulus is 1 (roots unchanged)."""
    sig = SpectralSignal(coeffs)
    peak = float(np.max(np.abs(to_samples(sig, max(m, 256)).values)))
    return SpectralSignal(coeffs / peak)


def mixed_root_cubic() -> SpectralSignal:
    """Cubic with two roots inside the unit disk and one outside.

    (z + 0.3 + i/3)(z - 0.2)(z - 1.5 - i/2); a convenient smoke-test
    signal whose factorization and unwinding behave nontrivially.
    """
    roots = [-0.3 - 1j / 3, 0.2, 1.5 + 0.5j]
    return SpectralSignal(poly_from_roots(roots))


def gaussian_chirp(m: int = 1024, carrier: int = 10, width: float = 1.0) -> SpectralSignal:
    """Holomorphic projection of a modulated Gaussian bump on the circle.

    exp(-((theta - pi)/width)^2) * exp(i * carrier * theta), projected onto
    nonnegative frequencies: a smooth oscillatory signal whose spectrum
    concentrates near the carrier bin.
    """
    theta = 2.0 * np.pi * np.arange(m) / m
    bump = np.exp(-(((theta - np.pi) / width) ** 2))
    vals = bump * np.exp(1j * carrier * theta)
    return holomorphic_project(BoundarySamples(vals))


def multiplicative_noise_signal(m: int, seed: int, terms: int = 50) -> np.ndarray:
    """cos(2 theta) multiplied by a random 50-term trigonometric series.

    The noise coefficients are i.i.d. standard normal scaled by 1/sqrt(n);
    the product is a pure frequency with heavy multiplicative amplitude
    noise, the input class for `unwindr.weiss.denoise`.
    """
    rng = np.random.default_rng(seed)
    theta = 2.0 * np.pi * np.arange(m) / m
    alpha = rng.standard_normal(terms)
    beta = rng.standard_normal(terms)
    noise = np.zeros(m)
    for k in range(1, terms + 1):
        noise += (alpha[k - 1] * np.cos(k * theta) + beta[k - 1] * np.sin(k * theta)) / np.sqrt(k)
    return np.cos(2.0 * theta) * noise


def random_separated_polynomial(
    rng: np.random.Generator,
    *,
    max_degree: int = 12,
    n_inside: int | None = None,
    n_outside: int | None = None,
    inside_max: float = 0.8,
    outside_min: float = 1.25,
    outside_max: float = 2.0,
):
    """Random polynomial with roots kept away from the unit circle.

    Returns (signal, inside_roots, outside_roots); the signal is scaled to
    unit max boundary modulus.  Root counts are drawn uniformly when not
    given, with total degree between 1 and ``max_degree``.
    """
    if n_inside is None or n_outside is None:
        degree = int(rng.integers(1, max_degree + 1))
        n_in = int(rng.integers(0, degree + 1)) if n_inside is None else n_inside
        n_in = min(n_in, degree)
        n_out = degree - n_in if n_outside is None else n_outside
    else:
        n_in, n_out = n_inside, n_outside
    if n_in + n_out < 1:
        n_in = 1

    inside = inside_max * np.sqrt(rng.uniform(0, 1, n_in)) * np.exp(
        2j * np.pi * rng.uniform(0, 1, n_in)
    )
    outside = rng.uniform(outside_min, outside_max, n_out) * np.exp(
        2j * np.pi * rng.uniform(0, 1, n_out)
    )
    coeffs = poly_from_roots(np.concatenate([inside, outside]))
    return _normalized(coeffs), inside, outside


def random_analytic_signal(
    rng: np.random.Generator,
    *,
    degree: int = 16,
    decay: float = 0.75,
    min_modulus: float | None = None,
) -> SpectralSignal:
    """Random one-sided trigonometric polynomial with geometric decay.

    Coefficients are complex Gaussian scaled by decay^n and the whole
    signal is normalized to unit max boundary modulus; the decay keeps the
    holomorphic extension comfortable on a disk of radius 1/decay.

    ``min_modulus`` rejection-samples draws whose boundary modulus dips
    below the given floor (relative to the unit peak): random coefficient
    vectors put zeros arbitrarily close to the circle, and corpora meant
    to exercise laws rather than failure modes stay a margin away, in the
    spirit of requiring holomorphy on a slightly larger disk.
    """
    n = degree + 1
    for _ in range(256):
        coeffs = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * decay ** np.arange(n)
        sig = _normalized(coeffs)
        if min_modulus is None:
            return sig
        lo = float(np.min(np.abs(to_samples(sig, 256).values)))
        if lo >= min_modulus:
            return sig
    raise ValueError(f"could not draw a signal with boundary modulus >= {min_modulus}")


def random_blaschke(
    rng: np.random.Generator, *, max_roots: int = 6, max_m: int = 2, root_max: float = 0.8
) -> BlaschkeProduct:
    """Random finite Blaschke product with roots well inside the disk."""
    m = int(rng.integers(0, max_m + 1))
    k = int(rng.integers(0, max_roots + 1))
    if m == 0 and k == 0:
        k = 1
    roots = root_max * np.sqrt(rng.uniform(0.01, 1, k)) * np.exp(
        2j * np.pi * rng.uniform(0, 1, k)
    )
    return BlaschkeProduct(m, tuple(roots))


def random_real_signal(rng: np.random.Generator, m: int, max_harmonic: int | None = None) -> np.ndarray:
    """Random real trigonometric polynomial sampled on the M-grid.

    Band-limited strictly below the Nyquist harmonic, so the circle
    Hilbert transform is exactly invertible on the grid.
    """
    if max_harmonic is None:
        max_harmonic = m // 4
    max_harmonic = min(max_harmonic, m // 2 - 1)
    theta = 2.0 * np.pi * np.arange(m) / m
    out = np.full(m, rng.standard_normal())
    for k in range(1, max_harmonic + 1):
        a, b = rng.standard_normal(2) / np.sqrt(k)
        out += a * np.cos(k * theta) + b * np.sin(k * theta)
    return out
