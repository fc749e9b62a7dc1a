"""Evaluate every proved identity on one concrete signal.

Nothing here is a spot check against magic numbers: each law is computed
from both of its sides and the slack printed is the actual numerical
margin.  Run `unwindr verify --suite all` for the corpus-scale version.
"""

from unwindr import (
    GammaWeights,
    check_carleson,
    check_h1_decrease,
    check_norm_monotonicity,
    check_stability,
    check_tail_energy,
    factor_polynomial,
    root_flip_gain,
)
from unwindr.corpora import mixed_root_cubic

f = mixed_root_cubic()
print("laws evaluated on the two-inside-one-outside cubic\n")

for label, gamma in [
    ("dirichlet (gamma_n = n)", GammaWeights.dirichlet()),
    ("h1 (gamma_n = n^2)", GammaWeights.h1()),
    ("sobolev s=1/4", GammaWeights.sobolev(0.25)),
]:
    rep = check_norm_monotonicity(f, gamma)
    print(f"X-norm drop, {label}:")
    print(f"  ||F||_X = {rep.norm_f_x:.6f} >= ||G||_X = {rep.norm_g_x:.6f}"
          f"  (drop {rep.norm_drop:.3e})")
    print(f"  refined gain slack: {rep.gain_slack:.3e} (root alpha = {rep.alpha:.4f})")

rep = check_h1_decrease(f)
print(f"\nboundary derivative energy:")
print(f"  int |G'|^2 + poisson = {rep.lhs:.6f} <= int |F'|^2 = {rep.rhs:.6f}")

car = check_carleson(f)
print(f"\ndisk-energy identity:")
print(f"  int_D |F'|^2 = {car.lhs:.6f}")
print(f"  int_D |G'|^2 + (1/2) poisson = {car.rhs:.6f}   (residual {car.residual:.2e})")

sides = root_flip_gain(f, 0.2, GammaWeights.dirichlet())
print(f"\nsingle-root inversion identity at alpha = 0.2:")
print(f"  lhs = {sides['lhs']:.10f}, rhs = {sides['rhs']:.10f}, "
      f"difference {abs(sides['lhs'] - sides['rhs']):.2e}")

g = factor_polynomial(f.coeffs).outer_signal()
print(f"\ntail energies shift downward: {check_tail_energy(f, g)}")

dev = check_stability([1.5 + 0.5j], [-0.3 - 1j / 3, 0.2], [-0.29 - 0.32j, 0.21], 512)
print(f"outer-part stability under root wiggle: max deviation {dev:.2e}")

print("\nall slacks above are nonnegative up to roundoff; the identities hold.")
