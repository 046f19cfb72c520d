"""
Why the rescaled range needs a small-sample correction
======================================================

For independent data, E[(R/S)_n] is NOT proportional to n**0.5 at small
window lengths n: the exact finite-sample expectation (Anis-Lloyd, with
the Peters prefactor) rises more steeply, which is why a log-log fit of
raw R/S values overestimates H on short series. Re-centering each
statistic on sqrt(0.5*pi*n) removes the effect.
"""

import numpy as np

from hurstlab import (
    ExponentialSpec,
    derive_stream,
    estimate_rs,
    estimate_rsal,
    expected_rs,
    exponential_sample,
)

print("window n | E(R/S)_n | sqrt(0.5*pi*n) | local log-log slope")
previous = None
for n in (2, 4, 8, 16, 32, 64, 128, 256, 512, 1024):
    e = expected_rs(n)
    asym = np.sqrt(0.5 * np.pi * n)
    slope = "" if previous is None else f"{np.log(e / previous) / np.log(2):.3f}"
    print(f"{n:8d} | {e:8.4f} | {asym:14.4f} | {slope}")
    previous = e
print("\nThe local slope starts far above 0.5 and only approaches it for")
print("large n; a regression over raw R/S therefore reads high.")

# Average both estimators over a few hundred short series.
plain, adjusted = [], []
for k in range(300):
    series = exponential_sample(derive_stream(7, 0, k), ExponentialSpec(lam=1.0, length=128))
    plain.append(estimate_rs(series).hurst)
    adjusted.append(estimate_rsal(series).hurst)

print(f"\nN=128, 300 replications, true H = 0.5:")
print(f"  plain R/S:    mean H = {np.mean(plain):.4f}")
print(f"  adjusted R/S: mean H = {np.mean(adjusted):.4f}")
