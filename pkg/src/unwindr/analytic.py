"""Analytic-signal construction and holomorphic projection.

The circle Hilbert transform is the Fourier multiplier sending
cos(k*theta) -> sin(k*theta) and sin(k*theta) -> -cos(k*theta) for k >= 1
and killing the mean.  Complexifying a real signal u as u + i*H(u) then
yields the spectrum a0/2 + sum (a_k - i b_k) e^{ik theta}: only
nonnegative frequencies survive.  The Nyquist bin of a two-sided
transform is not representable one-sided without ambiguity, so the
projection P+ zeroes it.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidGridError
from .spectral import BoundarySamples, SpectralSignal, is_power_of_two


def _as_real_vector(u) -> np.ndarray:
    arr = np.asarray(u)
    if np.iscomplexobj(arr):
        raise ValueError("expected a real vector")
    arr = np.asarray(arr, dtype=float)
    if arr.ndim != 1:
        raise ValueError("expected a 1-D vector")
    if not is_power_of_two(arr.size):
        raise InvalidGridError(f"grid size {arr.size} is not a power of two")
    return arr


def hilbert_transform(u) -> np.ndarray:
    """Circle Hilbert transform of a real sample vector; output has zero mean."""
    arr = _as_real_vector(u)
    m = arr.size
    spec = np.fft.fft(arr)
    mult = np.zeros(m, dtype=np.complex128)
    mult[1 : m // 2] = -1j
    mult[m // 2 + 1 :] = 1j
    return np.real(np.fft.ifft(spec * mult))


def analytic_signal(u) -> BoundarySamples:
    """Complexification u + i*H(u) of a real sample vector.

    The zeroth coefficient of the result equals mean(u) (the a0/2 of the
    cosine-series convention); the real part reproduces u on the grid.
    """
    arr = _as_real_vector(u)
    m = arr.size
    c = np.fft.fft(arr) / m
    spec = np.zeros(m, dtype=np.complex128)
    spec[0] = c[0]
    spec[1 : m // 2] = 2.0 * c[1 : m // 2]
    spec[m // 2] = c[m // 2]
    return BoundarySamples(np.fft.ifft(spec) * m)


def holomorphic_project(s: BoundarySamples) -> SpectralSignal:
    """P+: drop all negative-frequency bins (Nyquist included); idempotent."""
    spec = np.fft.fft(s.values) / s.m
    return SpectralSignal(spec[: s.m // 2])
