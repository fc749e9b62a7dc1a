"""Strip multiplicative noise from a pure tone by repeated renormalization.

A cos(2 theta) carrier is multiplied by a random 50-term series, which
destroys the amplitude but leaves the oscillation structure in the phase.
Dividing the complexified signal by its own modulus and re-projecting
onto nonnegative frequencies recovers a nearly unimodular signal whose
spectrum peaks back at the carrier.  Pass --save-plot for a PNG.
"""

import sys

import numpy as np

from unwindr import to_spectrum
from unwindr.corpora import multiplicative_noise_signal
from unwindr.weiss import denoise

M = 1024
SEED = 21  # pinned: recovery of the carrier bin is draw-dependent

u = multiplicative_noise_signal(M, seed=SEED)
print(f"noisy signal: cos(2 theta) times a 50-term random series (seed {SEED})")
print(f"  amplitude range: [{u.min():.2f}, {u.max():.2f}]\n")

results = {}
for rounds in (1, 2, 3):
    out = denoise(u, rounds)
    spec = to_spectrum(out, M // 2)
    dev = float(np.max(np.abs(np.abs(out.values) - 1.0)))
    dom = int(np.argmax(np.abs(spec.coeffs)))
    results[rounds] = out
    print(f"after {rounds} round(s): max | |f| - 1 | = {dev:.3f}, dominant bin = {dom}")

print("\nthe modulus flattens toward 1 while the dominant bin returns to the")
print("carrier frequency 2; the amplitude noise lived in |f| and is gone.")

if "--save-plot" in sys.argv:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    theta = 2 * np.pi * np.arange(M) / M
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    axes[0].plot(theta, u, lw=0.6)
    axes[0].set_title("noisy real signal")
    out = results[2]
    axes[1].plot(out.values.real, out.values.imag, lw=0.8)
    axes[1].set_title("after two rounds (complex curve)")
    axes[1].set_aspect("equal")
    fig.tight_layout()
    fig.savefig("denoising.png", dpi=120)
    print("wrote denoising.png")
