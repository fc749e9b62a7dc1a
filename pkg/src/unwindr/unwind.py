"""The unwinding iteration: factor, subtract a constant, repeat.

Starting from F = B_1 G_1, each step extracts the coefficient
a_n = G_n(alpha_n), factorizes the residual G_n - a_n = B_{n+1} G_{n+1},
and accumulates the expansion

    F = a_1 B_1 + a_2 B_1 B_2 + a_3 B_1 B_2 B_3 + ...

Cumulative factor products are formed in the sample domain on a fixed
grid, so degree growth never re-aliases.  Step counting: the initial
factorization of F is step 0; step n >= 1 factorizes the n-th residual.
Termination precedence is exact-zero remainder, then the residual
tolerance, then the step budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatchError, UnwindrError, UnwindStepError
from .spectral import (
    BoundarySamples,
    GammaWeights,
    SpectralSignal,
    default_grid,
    evaluate_at,
    l2_norm,
    norm_x,
    norm_y,
    to_samples,
)
from .weiss import weiss_factorize

SHIFT_STRATEGIES = ("origin", "maximize_selector")

#: Disk search grid for the shift selector: 32 radii by 64 angles.
_SELECTOR_RADII = 32
_SELECTOR_ANGLES = 64


@dataclass(frozen=True)
class UnwindConfig:
    """Knobs for the unwinding iteration.

    ``residual_tol`` applies to the boundary L2 norm of G_n - G_n(alpha_n)
    (the norm carries the 2*pi of the circle measure).  ``max_steps``
    bounds the number of residual factorizations.  ``grid`` of None picks
    the default oversampled power-of-two grid for the input.
    """

    max_steps: int = 32
    residual_tol: float = 1e-8
    gamma: GammaWeights = field(default_factory=GammaWeights.dirichlet)
    shift_strategy: str = "origin"
    grid: int | None = None

    def __post_init__(self):
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")
        if not self.residual_tol > 0:
            raise ValueError("residual_tol must be positive")
        if self.shift_strategy not in SHIFT_STRATEGIES:
            raise ValueError(f"shift_strategy must be one of {SHIFT_STRATEGIES}")


@dataclass(frozen=True, eq=False)
class UnwindTerm:
    """One expansion term: the coefficient a_k and its factor B_k."""

    coefficient: complex
    factor: BoundarySamples


@dataclass(frozen=True)
class StepDiagnostics:
    """Per-step record; ``step`` counts residual factorizations so far."""

    step: int
    shift: complex
    coefficient: complex
    residual_l2: float
    residual_sup: float
    norm_x: float
    norm_y: float
    min_boundary_modulus: float


@dataclass(frozen=True, eq=False)
class UnwindingExpansion:
    """Ordered terms, the current remainder G_n, and per-step diagnostics.

    ``history[k]`` is the outer part G_{k+1}; ``remainder`` is its last
    entry.  The exact reconstruction identity is

        F = sum_k a_k (B_1 ... B_k)  +  (B_1 ... B_n) (G_n - a_n),

    which `reconstruct` evaluates on the grid.
    """

    terms: tuple[UnwindTerm, ...]
    remainder: SpectralSignal
    shifts: tuple[complex, ...]
    diagnostics: tuple[StepDiagnostics, ...]
    history: tuple[SpectralSignal, ...]
    status: str
    grid: int
    initial_norm_x: float
    gamma: GammaWeights

    @property
    def residuals(self) -> list[float]:
        return [d.residual_l2 for d in self.diagnostics]


def select_shift(g: SpectralSignal, strategy: str) -> complex:
    """Expansion point alpha for the next subtraction.

    "origin" always returns 0.  "maximize_selector" returns the coarse-grid
    argmax of (1-|z|^2) |G(z)| over 32 radii by 64 angles (power-series
    evaluation inside the disk); exact ties resolve to the smallest |z|,
    then the smallest angle.
    """
    if strategy == "origin":
        return 0j
    if strategy != "maximize_selector":
        raise ValueError(f"shift strategy must be one of {SHIFT_STRATEGIES}")
    radii = np.arange(_SELECTOR_RADII) / _SELECTOR_RADII
    angles = 2.0 * np.pi * np.arange(_SELECTOR_ANGLES) / _SELECTOR_ANGLES
    z = radii[:, None] * np.exp(1j * angles)[None, :]
    vals = (1.0 - np.abs(z) ** 2) * np.abs(np.polynomial.polynomial.polyval(z, g.coeffs))
    flat = int(np.argmax(vals))  # first max in radius-major order = tie-break
    return complex(z.flat[flat])


def _constant_shifted(g: SpectralSignal, a: complex) -> SpectralSignal:
    coeffs = g.coeffs.copy()
    coeffs[0] -= a
    return SpectralSignal(coeffs)


def unwind(f: SpectralSignal, cfg: UnwindConfig | None = None) -> UnwindingExpansion:
    """Run the unwinding iteration on an analytic signal.

    Factorization failures at any step raise UnwindStepError carrying the
    step index and the expansion built so far.  A constant remainder takes
    the "degenerate" status (clean termination, not an error).
    """
    cfg = cfg or UnwindConfig()
    m = cfg.grid if cfg.grid is not None else default_grid(f.n)
    samples = to_samples(f, m)
    initial_x = norm_x(f, cfg.gamma)

    terms: list[UnwindTerm] = []
    shifts: list[complex] = []
    diags: list[StepDiagnostics] = []
    history: list[SpectralSignal] = []

    def _snapshot(status: str, remainder: SpectralSignal) -> UnwindingExpansion:
        return UnwindingExpansion(
            terms=tuple(terms),
            remainder=remainder,
            shifts=tuple(shifts),
            diagnostics=tuple(diags),
            history=tuple(history),
            status=status,
            grid=m,
            initial_norm_x=initial_x,
            gamma=cfg.gamma,
        )

    try:
        fact = weiss_factorize(samples)
    except UnwindrError as err:
        raise UnwindStepError(0, err, partial=None) from err

    factor = fact.inner
    g = fact.outer
    step = 0
    while True:
        history.append(g)
        alpha = select_shift(g, cfg.shift_strategy)
        a = complex(g.coeffs[0]) if alpha == 0 else evaluate_at(g, alpha)
        terms.append(UnwindTerm(coefficient=a, factor=factor))
        shifts.append(alpha)

        residual = _constant_shifted(g, a)
        residual_samples = to_samples(residual, m)
        res_l2 = l2_norm(residual)
        diags.append(
            StepDiagnostics(
                step=step,
                shift=alpha,
                coefficient=a,
                residual_l2=res_l2,
                residual_sup=float(np.max(np.abs(residual_samples.values))),
                norm_x=norm_x(g, cfg.gamma),
                norm_y=norm_y(g, cfg.gamma),
                min_boundary_modulus=float(np.min(np.abs(residual_samples.values))),
            )
        )

        if res_l2 == 0.0:
            return _snapshot("degenerate", g)
        if res_l2 <= cfg.residual_tol:
            return _snapshot("converged", g)
        if step >= cfg.max_steps:
            return _snapshot("max_steps", g)

        step += 1
        try:
            fact = weiss_factorize(residual_samples)
        except UnwindrError as err:
            raise UnwindStepError(step, err, partial=_snapshot("aborted", g)) from err
        factor = fact.inner
        g = fact.outer


def reconstruct(
    e: UnwindingExpansion,
    k: int,
    m: int | None = None,
    *,
    include_remainder: bool = False,
) -> BoundarySamples:
    """Partial sum of the first k terms on the expansion's grid.

    With ``include_remainder`` (allowed only at k = number of terms) the
    remainder term (B_1...B_n)(G_n - a_n) is added, reproducing the
    original signal up to the accumulated factorization tolerance.
    """
    if m is None:
        m = e.grid
    if m != e.grid:
        raise GridMismatchError(f"expansion grid is {e.grid}, requested {m}")
    if not 0 <= k <= len(e.terms):
        raise ValueError(f"k must be in 0..{len(e.terms)}")
    if include_remainder and k != len(e.terms):
        raise ValueError("remainder can only be added to the full partial sum")

    acc = np.zeros(m, dtype=np.complex128)
    prod = np.ones(m, dtype=np.complex128)
    for term in e.terms[:k]:
        prod = prod * term.factor.values
        acc = acc + term.coefficient * prod
    if include_remainder and e.terms:
        tail = _constant_shifted(e.remainder, e.terms[-1].coefficient)
        acc = acc + prod * to_samples(tail, m).values
    return BoundarySamples(acc)
