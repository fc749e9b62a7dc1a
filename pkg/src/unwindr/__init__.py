"""Blaschke factorization, unwinding series, and spectral identity checks.

Signals are holomorphic boundary functions on the unit circle, held
either as one-sided Fourier coefficients (`SpectralSignal`) or as samples
on a power-of-two grid (`BoundarySamples`).  The package factors such
signals into a unimodular part times an outer part without computing
roots, iterates that factorization into the unwinding series, and ships
executable checkers for the identities and inequalities the construction
obeys.
"""

from .analytic import analytic_signal, hilbert_transform, holomorphic_project
from .blaschke import (
    BlaschkeProduct,
    PolynomialFactorization,
    blaschke_eval,
    factor_polynomial,
    phase_derivative,
    phase_derivative_samples,
    poly_from_roots,
    root_flip_gain,
)
from .errors import (
    AliasingError,
    BoundaryRootError,
    GridMismatchError,
    InvalidGridError,
    NearBoundaryRootError,
    NearZeroModulusError,
    NonAnalyticInputError,
    PointOnCurveError,
    StillDegenerateError,
    UnderResolvedCurveError,
    UnwindrError,
    UnwindStepError,
)
from .laws import (
    check_carleson,
    check_h1_decrease,
    check_norm_monotonicity,
    check_stability,
    check_tail_energy,
    divide_by_conjugate_factor,
    poisson_weighted_l2,
)
from .spectral import (
    BoundarySamples,
    GammaWeights,
    SpectralSignal,
    default_grid,
    differentiate,
    dirichlet_energy,
    evaluate_at,
    inner_product,
    l2_norm,
    negative_energy_fraction,
    norm_x,
    norm_y,
    to_samples,
    to_spectrum,
    winding_area,
    winding_number,
)
from .unwind import (
    UnwindConfig,
    UnwindingExpansion,
    UnwindTerm,
    reconstruct,
    select_shift,
    unwind,
)
from .weiss import (
    ConstantStabilizer,
    Factorization,
    ShiftStabilizer,
    denoise,
    stabilized_factorize,
    weiss_factorize,
)

__version__ = "0.1.0"

__all__ = [
    "AliasingError",
    "BlaschkeProduct",
    "BoundaryRootError",
    "BoundarySamples",
    "ConstantStabilizer",
    "Factorization",
    "GammaWeights",
    "GridMismatchError",
    "InvalidGridError",
    "NearBoundaryRootError",
    "NearZeroModulusError",
    "NonAnalyticInputError",
    "PointOnCurveError",
    "PolynomialFactorization",
    "ShiftStabilizer",
    "SpectralSignal",
    "StillDegenerateError",
    "UnderResolvedCurveError",
    "UnwindConfig",
    "UnwindStepError",
    "UnwindTerm",
    "UnwindingExpansion",
    "UnwindrError",
    "analytic_signal",
    "blaschke_eval",
    "check_carleson",
    "check_h1_decrease",
    "check_norm_monotonicity",
    "check_stability",
    "check_tail_energy",
    "default_grid",
    "denoise",
    "differentiate",
    "dirichlet_energy",
    "divide_by_conjugate_factor",
    "evaluate_at",
    "factor_polynomial",
    "hilbert_transform",
    "holomorphic_project",
    "inner_product",
    "l2_norm",
    "negative_energy_fraction",
    "norm_x",
    "norm_y",
    "phase_derivative",
    "phase_derivative_samples",
    "poisson_weighted_l2",
    "poly_from_roots",
    "reconstruct",
    "root_flip_gain",
    "select_shift",
    "stabilized_factorize",
    "to_samples",
    "to_spectrum",
    "unwind",
    "weiss_factorize",
    "winding_area",
    "winding_number",
]
