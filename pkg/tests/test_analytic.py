import numpy as np
import pytest

from unwindr import (
    BoundarySamples,
    SpectralSignal,
    analytic_signal,
    hilbert_transform,
    holomorphic_project,
    to_samples,
)
from unwindr.corpora import random_real_signal
from unwindr.errors import InvalidGridError

M = 256
THETA = 2 * np.pi * np.arange(M) / M


def test_cosine_becomes_exponential():
    out = analytic_signal(np.cos(THETA))
    np.testing.assert_allclose(out.values, np.exp(1j * THETA), atol=1e-12)


def test_sine_becomes_rotated_exponential():
    out = analytic_signal(np.sin(THETA))
    np.testing.assert_allclose(out.values, -1j * np.exp(1j * THETA), atol=1e-12)


def test_constant_passes_through():
    out = analytic_signal(np.full(M, 2.5))
    np.testing.assert_allclose(out.values, np.full(M, 2.5), atol=1e-13)


def test_real_part_is_preserved():
    rng = np.random.default_rng(23)
    u = random_real_signal(rng, M)
    out = analytic_signal(u)
    np.testing.assert_allclose(out.values.real, u, atol=1e-12)


def test_mean_is_zeroth_coefficient():
    rng = np.random.default_rng(29)
    u = random_real_signal(rng, M)
    spec = np.fft.fft(analytic_signal(u).values) / M
    assert spec[0] == pytest.approx(np.mean(u), abs=1e-13)


def test_hilbert_on_pure_tones():
    np.testing.assert_allclose(hilbert_transform(np.cos(THETA)), np.sin(THETA), atol=1e-12)
    np.testing.assert_allclose(hilbert_transform(np.sin(THETA)), -np.cos(THETA), atol=1e-12)


def test_hilbert_squared_is_minus_identity_plus_mean():
    rng = np.random.default_rng(31)
    for _ in range(5):
        u = random_real_signal(rng, M)
        twice = hilbert_transform(hilbert_transform(u))
        np.testing.assert_allclose(twice, -(u - np.mean(u)), atol=1e-12)


def test_hilbert_output_has_zero_mean():
    rng = np.random.default_rng(37)
    u = random_real_signal(rng, M)
    assert abs(np.mean(hilbert_transform(u))) < 1e-14


def test_hilbert_rejects_complex_and_odd_grids():
    with pytest.raises(ValueError):
        hilbert_transform(np.exp(1j * THETA))
    with pytest.raises(InvalidGridError):
        hilbert_transform(np.ones(12))


def test_analytic_signal_recovers_spectrum():
    # real constant coefficient and degree < M/2: complexifying the real
    # part recovers the signal
    rng = np.random.default_rng(41)
    coeffs = rng.standard_normal(20) + 1j * rng.standard_normal(20)
    coeffs[0] = coeffs[0].real
    f = SpectralSignal(coeffs)
    u = to_samples(f, M).values.real
    out = analytic_signal(u)
    np.testing.assert_allclose(out.values, to_samples(f, M).values, atol=1e-10)


def test_project_kills_negative_frequencies():
    s = BoundarySamples(np.exp(-1j * THETA))
    f = holomorphic_project(s)
    assert np.max(np.abs(f.coeffs)) < 1e-14


def test_project_leaves_analytic_signals_alone():
    rng = np.random.default_rng(43)
    coeffs = rng.standard_normal(10) + 1j * rng.standard_normal(10)
    s = to_samples(SpectralSignal(coeffs), M)
    f = holomorphic_project(s)
    np.testing.assert_allclose(f.coeffs[:10], coeffs, atol=1e-12)
    assert np.max(np.abs(f.coeffs[10:])) < 1e-12


def test_project_is_idempotent():
    rng = np.random.default_rng(47)
    vals = rng.standard_normal(M) + 1j * rng.standard_normal(M)
    once = holomorphic_project(BoundarySamples(vals))
    twice = holomorphic_project(to_samples(once, M))
    np.testing.assert_allclose(twice.coeffs, once.coeffs, atol=1e-13)


def test_modulated_bump_concentrates_near_carrier():
    m = 1024
    theta = 2 * np.pi * np.arange(m) / m
    s = BoundarySamples(np.exp(-((theta - np.pi) ** 2)) * np.exp(10j * theta))
    # two-sided oracle for the energy bookkeeping
    two_sided = np.fft.fft(s.values) / m
    total = np.sum(np.abs(two_sided) ** 2)
    negative = np.sum(np.abs(two_sided[m // 2 :]) ** 2)
    assert negative < 0.25 * total

    f = holomorphic_project(s)
    energy = np.abs(f.coeffs) ** 2
    assert int(np.argmax(energy)) == 10
    assert np.sum(energy[21:]) < 0.25 * total
