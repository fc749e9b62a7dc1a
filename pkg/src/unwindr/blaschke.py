"""Root-based Blaschke products and polynomial inner-outer factorization.

This module is the exact, root-aware ground truth against which the
root-free algorithm in `unwindr.weiss` is checked.  A finite Blaschke
product

    B(z) = z^m * prod_i (conj(a_i)/|a_i|) (z - a_i) / (1 - conj(a_i) z)

has unit modulus on the circle; factoring a polynomial as B*G inverts
every disk root across the unit circle (r -> 1/conj(r)) and leaves the
rest untouched, so G carries the full boundary modulus and no disk zeros.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundaryRootError, NearBoundaryRootError
from .spectral import BoundarySamples, GammaWeights, SpectralSignal, differentiate

#: Half-width of the guard band around |z| = 1 inside which roots are rejected.
TAU_BOUNDARY = 1e-8


@dataclass(frozen=True)
class BlaschkeProduct:
    """Origin multiplicity m plus a list of nonzero roots in the open disk."""

    m: int = 0
    roots: tuple[complex, ...] = ()

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("origin multiplicity must be nonnegative")
        roots = tuple(complex(r) for r in self.roots)
        for r in roots:
            if r == 0:
                raise ValueError("origin zeros belong in m, not in the root list")
            if abs(r) >= 1.0 - TAU_BOUNDARY:
                raise NearBoundaryRootError(
                    f"root {r} lies within {TAU_BOUNDARY:.0e} of the unit circle"
                )
        object.__setattr__(self, "roots", roots)

    @property
    def degree(self) -> int:
        """Total number of zeros in the disk, origin included."""
        return self.m + len(self.roots)


def blaschke_eval(b: BlaschkeProduct, m: int) -> BoundarySamples:
    """Pointwise boundary values of the product on the uniform M-grid."""
    z = np.exp(2j * np.pi * np.arange(m) / m)
    vals = z**b.m if b.m else np.ones(m, dtype=np.complex128)
    for a in b.roots:
        vals = vals * (np.conj(a) / abs(a)) * (z - a) / (1.0 - np.conj(a) * z)
    return BoundarySamples(vals)


def phase_derivative(b: BlaschkeProduct, m: int) -> np.ndarray:
    """Instantaneous frequency phi'(theta) of the product on the M-grid.

    Closed form: m plus one Poisson kernel (1-|a|^2)/|e^{i theta}-a|^2 per
    root; strictly above m wherever roots exist, and averaging to
    m + #roots over the circle.
    """
    z = np.exp(2j * np.pi * np.arange(m) / m)
    out = np.full(m, float(b.m))
    for a in b.roots:
        out += (1.0 - abs(a) ** 2) / np.abs(z - a) ** 2
    return out


def phase_derivative_samples(s: BoundarySamples) -> np.ndarray:
    """Root-free twin of `phase_derivative`: Im(s' / s) by spectral differentiation.

    Valid for any sampled curve that stays away from zero.
    """
    ds = differentiate(s).values
    return np.imag(np.conj(s.values) * ds) / np.abs(s.values) ** 2


def poly_from_roots(roots, leading: complex = 1.0 + 0j) -> np.ndarray:
    """Ascending coefficients of leading * prod (z - r)."""
    coeffs = np.array([complex(leading)])
    for r in roots:
        coeffs = np.polynomial.polynomial.polymul(coeffs, [-complex(r), 1.0])
    return coeffs


def poly_roots(coeffs) -> np.ndarray:
    """Roots of an ascending-coefficient polynomial via the companion matrix."""
    c = np.asarray(coeffs, dtype=np.complex128)
    return np.roots(c[::-1])


@dataclass(frozen=True, eq=False)
class PolynomialFactorization:
    """Exact inner-outer splitting of a polynomial.

    ``outer_coeffs`` holds the outer part normalized so its value at 0 is
    real and positive; ``normalization`` is the unimodular constant that
    was applied to achieve that.  The full inner part is therefore
    conj(normalization) * B, and inner * outer reproduces the input on the
    boundary.
    """

    blaschke: BlaschkeProduct
    outer_coeffs: np.ndarray
    normalization: complex

    def __post_init__(self):
        arr = np.asarray(self.outer_coeffs, dtype=np.complex128).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "outer_coeffs", arr)

    @property
    def disk_root_count(self) -> int:
        return self.blaschke.degree

    def outer_signal(self) -> SpectralSignal:
        return SpectralSignal(self.outer_coeffs)

    def outer_samples(self, m: int) -> BoundarySamples:
        from .spectral import to_samples

        return to_samples(self.outer_signal(), m)

    def inner_samples(self, m: int) -> BoundarySamples:
        """Boundary values of the canonical inner part conj(u) * B."""
        vals = blaschke_eval(self.blaschke, m).values * np.conj(self.normalization)
        return BoundarySamples(vals)

    def boundary_product(self, m: int) -> BoundarySamples:
        """inner * outer on the grid; matches the input polynomial."""
        return BoundarySamples(self.inner_samples(m).values * self.outer_samples(m).values)


def factor_polynomial(coeffs, *, tau: float = TAU_BOUNDARY) -> PolynomialFactorization:
    """Inner-outer factorization of a polynomial given ascending coefficients.

    Roots are found by companion-matrix eigenvalues.  Roots inside the
    disk go to the Blaschke part; the outer part keeps outside roots and
    gains the inverted images 1/conj(r) of inside ones, with the constant
    bookkeeping arranged so inner * outer equals the input.  A root whose
    modulus falls within ``tau`` of 1 aborts with BoundaryRootError: on
    the guard band the split is numerically meaningless.
    """
    c = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
    while c.size > 1 and c[-1] == 0:
        c = c[:-1]
    if c.size == 1 and c[0] == 0:
        raise ValueError("cannot factor the zero polynomial")

    m0 = 0
    while c[0] == 0:
        m0 += 1
        c = c[1:]

    if c.size == 1:
        inside = np.array([], dtype=np.complex128)
        outside = np.array([], dtype=np.complex128)
    else:
        roots = poly_roots(c)
        dist = np.abs(np.abs(roots) - 1.0)
        if np.any(dist <= tau):
            worst = roots[np.argmin(dist)]
            raise BoundaryRootError(
                f"root {worst} lies within {tau:.0e} of the unit circle"
            )
        inside = roots[np.abs(roots) < 1.0]
        outside = roots[np.abs(roots) > 1.0]

    leading = c[-1]
    constant = leading * np.prod(
        np.array([abs(r) / np.conj(r) for r in inside], dtype=np.complex128)
    ) if inside.size else leading

    outer = np.array([constant])
    for r in inside:
        outer = np.polynomial.polynomial.polymul(outer, [1.0, -np.conj(r)])
    for s in outside:
        outer = np.polynomial.polynomial.polymul(outer, [-s, 1.0])

    u = np.conj(outer[0]) / abs(outer[0])
    return PolynomialFactorization(
        blaschke=BlaschkeProduct(m0, tuple(inside)),
        outer_coeffs=outer * u,
        normalization=complex(u),
    )


def root_flip_gain(f: SpectralSignal, alpha: complex, gamma: GammaWeights) -> dict:
    """Both sides of the single-root inversion identity in the X/Y norms.

    lhs = ||(z-alpha) f||_X^2 - ||(1-conj(alpha) z) f||_X^2 computed from
    shifted coefficient vectors; rhs = (1-|alpha|^2) ||f||_Y^2.  The two
    are equal for every nondecreasing weight sequence.
    """
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise ValueError("alpha must lie in the open unit disk")
    a = f.coeffs
    n = a.size

    shifted = np.zeros(n + 1, dtype=np.complex128)  # (z - alpha) f
    shifted[1:] = a
    shifted[:n] -= alpha * a

    inverted = np.zeros(n + 1, dtype=np.complex128)  # (1 - conj(alpha) z) f
    inverted[:n] = a
    inverted[1:] -= np.conj(alpha) * a

    w = gamma.weights(n + 1)
    lhs = float(np.sum(w * np.abs(shifted) ** 2) - np.sum(w * np.abs(inverted) ** 2))

    d = gamma.diff_weights(n)
    rhs = float((1.0 - abs(alpha) ** 2) * np.sum(d * np.abs(a) ** 2))
    return {"lhs": lhs, "rhs": rhs}
