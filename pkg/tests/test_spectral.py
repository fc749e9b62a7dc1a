import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unwindr import (
    AliasingError,
    BoundarySamples,
    GammaWeights,
    InvalidGridError,
    NonAnalyticInputError,
    PointOnCurveError,
    SpectralSignal,
    UnderResolvedCurveError,
    dirichlet_energy,
    inner_product,
    to_samples,
    to_spectrum,
    winding_area,
    winding_number,
)
from unwindr.blaschke import BlaschkeProduct, blaschke_eval
from unwindr.corpora import mixed_root_cubic
from unwindr.spectral import GridMismatchError, norm_x, norm_y


def test_to_samples_monomial_is_roots_of_unity():
    s = to_samples(SpectralSignal([0, 1]), 4)
    np.testing.assert_allclose(s.values, [1, 1j, -1, -1j], atol=1e-15)


def test_to_samples_constant():
    c = 0.7 - 0.2j
    s = to_samples(SpectralSignal([c]), 16)
    np.testing.assert_allclose(s.values, np.full(16, c), atol=1e-15)


def test_to_samples_matches_horner_oracle():
    rng = np.random.default_rng(3)
    coeffs = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    s = to_samples(SpectralSignal(coeffs), 32)
    # independent oracle: direct Horner evaluation at each grid point
    z = np.exp(2j * np.pi * np.arange(32) / 32)
    direct = np.array([np.polynomial.polynomial.polyval(zz, coeffs) for zz in z])
    np.testing.assert_allclose(s.values, direct, atol=1e-12)


def test_to_samples_rejects_bad_grids():
    f = SpectralSignal(np.ones(8))
    with pytest.raises(AliasingError):
        to_samples(f, 4)
    with pytest.raises(InvalidGridError):
        to_samples(f, 24)


def test_to_spectrum_round_trip():
    rng = np.random.default_rng(5)
    coeffs = rng.standard_normal(12) + 1j * rng.standard_normal(12)
    f = SpectralSignal(coeffs)
    back = to_spectrum(to_samples(f, 64), 12)
    np.testing.assert_allclose(back.coeffs, coeffs, atol=1e-12)


def test_to_spectrum_rejects_negative_frequency():
    theta = 2 * np.pi * np.arange(64) / 64
    s = BoundarySamples(np.exp(-1j * theta))
    with pytest.raises(NonAnalyticInputError):
        to_spectrum(s, 8)


def test_to_spectrum_geometric_series():
    theta = 2 * np.pi * np.arange(1024) / 1024
    s = BoundarySamples(1.0 / (1.0 - 0.5 * np.exp(1j * theta)))
    f = to_spectrum(s, 64)
    np.testing.assert_allclose(f.coeffs, 0.5 ** np.arange(64), atol=1e-12)


def test_norm_x_examples():
    assert norm_x(SpectralSignal([1, 1]), GammaWeights.dirichlet()) == pytest.approx(1.0)
    assert norm_x(SpectralSignal([0, 0, 1]), GammaWeights.h1()) == pytest.approx(2.0)


def test_norm_x_matches_direct_sum():
    rng = np.random.default_rng(11)
    coeffs = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    gamma_vals = np.concatenate([[0.0], np.cumsum(rng.uniform(0, 1, 9))])
    g = GammaWeights.explicit(gamma_vals)
    expected = np.sqrt(sum(gamma_vals[n] * abs(coeffs[n]) ** 2 for n in range(9)))
    assert norm_x(SpectralSignal(coeffs), g) == pytest.approx(expected, rel=1e-15)


def test_norm_y_examples():
    assert norm_y(SpectralSignal([1.0]), GammaWeights.dirichlet()) == pytest.approx(1.0)
    assert norm_y(SpectralSignal([0, 1.0]), GammaWeights.h1()) == pytest.approx(np.sqrt(3))


def test_norm_y_dirichlet_is_l2():
    rng = np.random.default_rng(13)
    coeffs = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    f = SpectralSignal(coeffs)
    assert norm_y(f, GammaWeights.dirichlet()) == pytest.approx(np.linalg.norm(coeffs))


@given(
    st.lists(st.tuples(st.floats(-3, 3), st.floats(-3, 3)), min_size=1, max_size=12),
    st.tuples(st.floats(-5, 5), st.floats(-5, 5)),
)
@settings(max_examples=50, deadline=None)
def test_norm_x_ignores_constants(pairs, const):
    coeffs = np.array([complex(a, b) for a, b in pairs])
    shifted = coeffs.copy()
    shifted[0] += complex(*const)
    g = GammaWeights.dirichlet()
    assert norm_x(SpectralSignal(coeffs), g) == pytest.approx(
        norm_x(SpectralSignal(shifted), g), abs=1e-9
    )


def test_gamma_weights_validation():
    with pytest.raises(ValueError):
        GammaWeights.explicit([1.0, 2.0])  # gamma_0 != 0
    with pytest.raises(ValueError):
        GammaWeights.explicit([0.0, 2.0, 1.0])  # decreasing
    with pytest.raises(ValueError):
        GammaWeights.sobolev(0.0)
    with pytest.raises(ValueError):
        GammaWeights("mystery")


def test_gamma_explicit_extends_by_final_value():
    g = GammaWeights.explicit([0.0, 1.0, 4.0])
    np.testing.assert_allclose(g.weights(5), [0, 1, 4, 4, 4])
    np.testing.assert_allclose(g.diff_weights(4), [1, 3, 0, 0])


def test_inner_product_monomials():
    z = to_samples(SpectralSignal([0, 1]), 8)
    z2 = to_samples(SpectralSignal([0, 0, 1]), 8)
    assert inner_product(z, z) == pytest.approx(2 * np.pi)
    assert abs(inner_product(z, z2)) < 1e-14


def test_inner_product_blaschke_orthogonality():
    # <B1, B1*B2> = integral of B2 = 2*pi*B2(0), zero whenever B2 has an
    # origin zero -- the nested-product situation the expansion produces
    rng = np.random.default_rng(17)
    m = 512
    for _ in range(5):
        roots1 = 0.7 * rng.uniform(0.1, 1, 2) * np.exp(2j * np.pi * rng.uniform(0, 1, 2))
        roots2 = 0.7 * rng.uniform(0.1, 1, 2) * np.exp(2j * np.pi * rng.uniform(0, 1, 2))
        b1 = blaschke_eval(BlaschkeProduct(0, tuple(roots1)), m)
        b2 = blaschke_eval(BlaschkeProduct(1, tuple(roots2)), m)
        prod = BoundarySamples(b1.values * b2.values)
        assert abs(inner_product(b1, prod)) <= 1e-8 * 2 * np.pi


def test_inner_product_grid_mismatch():
    with pytest.raises(GridMismatchError):
        inner_product(BoundarySamples(np.ones(8)), BoundarySamples(np.ones(16)))


@given(st.lists(st.tuples(st.floats(-2, 2), st.floats(-2, 2)), min_size=1, max_size=10))
@settings(max_examples=50, deadline=None)
def test_parseval(pairs):
    coeffs = np.array([complex(a, b) for a, b in pairs])
    f = SpectralSignal(coeffs)
    s = to_samples(f, 64)
    lhs = 2 * np.pi * np.sum(np.abs(coeffs) ** 2)
    rhs = inner_product(s, s).real
    assert rhs == pytest.approx(lhs, rel=1e-10, abs=1e-12)


def test_dirichlet_energy_monomials():
    assert dirichlet_energy(SpectralSignal([0, 1])) == pytest.approx(np.pi)
    assert dirichlet_energy(SpectralSignal([0, 0, 1])) == pytest.approx(2 * np.pi)


def test_dirichlet_energy_matches_winding_area_for_cubic():
    f = mixed_root_cubic()
    s = to_samples(f, 256)
    assert winding_area(s) == pytest.approx(dirichlet_energy(f), rel=1e-8)


def test_winding_area_unit_circle_and_orientation():
    s = to_samples(SpectralSignal([0, 1]), 64)
    assert winding_area(s) == pytest.approx(np.pi)
    reversed_curve = BoundarySamples(s.values[::-1])
    assert winding_area(reversed_curve) == pytest.approx(-np.pi)


def test_winding_area_equals_energy_on_random_polynomials():
    rng = np.random.default_rng(19)
    for _ in range(10):
        deg = int(rng.integers(1, 9))
        coeffs = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        f = SpectralSignal(coeffs)
        s = to_samples(f, 256)
        assert winding_area(s) == pytest.approx(dirichlet_energy(f), rel=1e-8)


def test_winding_number_basics():
    circle = to_samples(SpectralSignal([0, 1]), 64)
    assert winding_number(circle, 0) == 1
    assert winding_number(circle, 2) == 0
    squared = to_samples(SpectralSignal([0, 0, 1]), 64)
    assert winding_number(squared, 0) == 2


def test_winding_number_guards():
    circle = to_samples(SpectralSignal([0, 1]), 64)
    with pytest.raises(PointOnCurveError):
        winding_number(circle, 1.0)
    fast = to_samples(SpectralSignal([0, 0, 0, 0, 1]), 8)  # z^4 on 8 points: steps of pi
    with pytest.raises(UnderResolvedCurveError):
        winding_number(fast, 0)


def test_boundary_samples_validation():
    with pytest.raises(InvalidGridError):
        BoundarySamples(np.ones(12))
    with pytest.raises(ValueError):
        BoundarySamples(np.array([np.nan + 0j] + [0j] * 7))
