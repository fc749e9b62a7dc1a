import numpy as np
import pytest

from unwindr import (
    BoundarySamples,
    ConstantStabilizer,
    NearZeroModulusError,
    NonAnalyticInputError,
    ShiftStabilizer,
    SpectralSignal,
    StillDegenerateError,
    denoise,
    factor_polynomial,
    stabilized_factorize,
    to_samples,
    to_spectrum,
    weiss_factorize,
    winding_number,
)
from unwindr.blaschke import poly_from_roots
from unwindr.corpora import multiplicative_noise_signal, random_separated_polynomial

M = 512
THETA = 2 * np.pi * np.arange(M) / M


def test_scaled_monomial():
    s = to_samples(SpectralSignal([0, 2.0]), M)
    fact = weiss_factorize(s)
    np.testing.assert_allclose(fact.inner.values, np.exp(1j * THETA), atol=1e-10)
    assert fact.outer.coeffs[0] == pytest.approx(2.0, abs=1e-10)
    assert np.max(np.abs(fact.outer.coeffs[1:])) < 1e-10


def test_no_disk_roots_gives_constant_inner():
    s = to_samples(SpectralSignal([-2.0, 1.0]), M)
    fact = weiss_factorize(s)
    # inner part is a unimodular constant; outer is the canonical
    # normalization of the input with positive real mean
    assert np.max(np.abs(fact.inner.values - fact.inner.values[0])) < 1e-10
    assert abs(abs(fact.inner.values[0]) - 1.0) < 1e-10
    oracle = factor_polynomial([-2.0, 1.0])
    np.testing.assert_allclose(
        fact.outer_boundary().values, oracle.outer_samples(M).values, atol=1e-8
    )


def test_matches_root_oracle():
    rng = np.random.default_rng(89)
    for _ in range(10):
        sig, _, _ = random_separated_polynomial(rng, max_degree=12)
        s = to_samples(sig, M)
        fact = weiss_factorize(s)
        oracle = factor_polynomial(sig.coeffs)
        assert np.max(np.abs(fact.inner.values - oracle.inner_samples(M).values)) <= 1e-8
        assert np.max(np.abs(fact.outer_boundary().values - oracle.outer_samples(M).values)) <= 1e-8


def test_factorization_contracts():
    rng = np.random.default_rng(97)
    sig, _, _ = random_separated_polynomial(rng, max_degree=10)
    s = to_samples(sig, M)
    fact = weiss_factorize(s)
    assert np.max(np.abs(np.abs(fact.inner.values) - 1.0)) <= 1e-8
    assert np.max(np.abs(np.abs(fact.outer_boundary().values) - np.abs(s.values))) <= 1e-8
    assert fact.outer.coeffs[0].real > 0
    assert abs(fact.outer.coeffs[0].imag) <= 1e-10 * fact.outer.coeffs[0].real
    assert winding_number(fact.outer_boundary(), 0) == 0


def test_boundary_zero_raises_with_payload():
    s = to_samples(SpectralSignal([-1.0, 1.0]), M)  # z - 1 vanishes at theta = 0
    with pytest.raises(NearZeroModulusError) as excinfo:
        weiss_factorize(s)
    err = excinfo.value
    assert err.min_modulus is not None and err.min_modulus < 1e-3
    assert err.theta is not None
    assert "stabilized_factorize" in str(err)


def test_non_analytic_input_rejected():
    s = BoundarySamples(np.exp(-1j * THETA))
    with pytest.raises(NonAnalyticInputError):
        weiss_factorize(s)


def test_constant_stabilizer_lifts_boundary_zero():
    s = to_samples(SpectralSignal([-1.0, 1.0]), M)
    fact = stabilized_factorize(s, ConstantStabilizer(0.01))
    assert fact.stabilizer == "constant"
    assert fact.perturbation == pytest.approx(0.01)
    assert np.max(np.abs(np.abs(fact.inner.values) - 1.0)) <= 1e-8
    # the shifted root sits 0.01 from the circle; the internal grid
    # refinement keeps the factorization of s + 0.01 exact anyway
    target = s.values + 0.01
    recon = fact.inner.values * fact.outer_boundary().values
    np.testing.assert_allclose(recon, target, atol=1e-8)


def test_constant_stabilizer_reconstructs_at_tolerance_with_margin():
    s = to_samples(SpectralSignal([-1.0, 1.0]), 1024)
    fact = stabilized_factorize(s, ConstantStabilizer(0.25))
    assert fact.outer_tail_fraction <= 1e-12
    target = s.values + 0.25
    recon = fact.inner.values * fact.outer_boundary().values
    np.testing.assert_allclose(recon, target, atol=1e-8)


def test_shift_zero_equals_mean_subtraction():
    rng = np.random.default_rng(101)
    sig, _, _ = random_separated_polynomial(rng, max_degree=8)
    coeffs = sig.coeffs.copy()
    coeffs[0] += 2.5  # keep the mean well away from zero
    s = to_samples(SpectralSignal(coeffs), M)
    shifted = stabilized_factorize(s, ShiftStabilizer(0.0))
    centered = coeffs.copy()
    centered[0] = 0
    direct = weiss_factorize(to_samples(SpectralSignal(centered), M))
    np.testing.assert_allclose(shifted.inner.values, direct.inner.values, atol=1e-10)
    np.testing.assert_allclose(shifted.outer.coeffs, direct.outer.coeffs, atol=1e-10)
    assert shifted.perturbation == pytest.approx(-complex(coeffs[0]), abs=1e-10)


def test_shift_at_extension_zero_stays_degenerate():
    # s vanishes on the boundary and its extension vanishes at 0.1, so the
    # shift subtracts nothing and the signal stays degenerate
    s = to_samples(SpectralSignal(poly_from_roots([1.0, 0.1])), M)
    with pytest.raises(StillDegenerateError):
        stabilized_factorize(s, ShiftStabilizer(0.1))


def test_shift_outside_disk_rejected():
    s = to_samples(SpectralSignal([1.0, 0.2]), M)
    with pytest.raises(ValueError):
        stabilized_factorize(s, ShiftStabilizer(1.2))


def test_denoise_requires_rounds():
    with pytest.raises(ValueError):
        denoise(np.ones(64), 0)


def test_denoise_pulls_modulus_toward_one():
    u = 2.0 + np.cos(2 * THETA)
    initial = np.max(np.abs(np.abs(u + 0j) - 1.0))
    out = denoise(u, 1)
    deviation = np.max(np.abs(np.abs(out.values) - 1.0))
    # frozen from a direct simulation run: one round lands at 0.371
    assert deviation <= 0.4
    assert deviation < initial


def test_denoise_reports_shrinking_deviation():
    u = 2.0 + np.cos(2 * THETA)
    devs = [
        float(np.max(np.abs(np.abs(denoise(u, r).values) - 1.0))) for r in (1, 2, 3)
    ]
    assert devs[2] < devs[0]


def test_denoise_recovers_carrier_for_pinned_seed():
    u = multiplicative_noise_signal(1024, seed=21)
    out = denoise(u, 2)
    spec = to_spectrum(out, 512)
    assert int(np.argmax(np.abs(spec.coeffs))) == 2


def test_denoise_clean_tone_is_fixed_point():
    u = np.cos(2 * THETA)
    out = denoise(u, 1)
    np.testing.assert_allclose(out.values, np.exp(2j * THETA), atol=1e-10)


def test_refinement_engages_for_near_circle_zero():
    # z - 0.99: the zero sits 0.01 off the circle, far beyond what the
    # base grid resolves; the internal refinement must recover exactness
    s = to_samples(SpectralSignal([-0.99, 1.0]), M)
    fact = weiss_factorize(s)
    recon = fact.inner.values * fact.outer_boundary().values
    np.testing.assert_allclose(recon, s.values, atol=1e-8)
    oracle = factor_polynomial([-0.99, 1.0])
    np.testing.assert_allclose(
        fact.outer_boundary().values, oracle.outer_samples(M).values, atol=1e-8
    )


def test_dirty_inputs_skip_refinement_but_still_factor():
    # negative-frequency junk below the analyticity gate but above the
    # refinement eligibility floor takes the plain single-grid path
    clean = to_samples(SpectralSignal([2.0, 1.0, 0.25]), M).values
    dirty = clean + 1e-5 * np.exp(-2j * THETA)
    fact = weiss_factorize(BoundarySamples(dirty))
    assert np.max(np.abs(np.abs(fact.inner.values) - 1.0)) <= 1e-10
    recon = fact.inner.values * fact.outer_boundary().values
    np.testing.assert_allclose(recon, dirty, atol=1e-8)
