"""Detrended Fluctuation Analysis.

Each subseries is cumulated WITHOUT prior mean subtraction, a least-squares
line is fitted to the cumulative profile against t = 1..n, and the RMS of
the residuals is the per-subseries fluctuation F(m). Skipping the centering
is deliberate: a constant offset c in the data only adds the ramp c*t to the
profile, which the line fit removes exactly, so F(m) is unchanged. The Hurst
estimate is the slope of log mean-fluctuation against log window length;
slopes above 1 are possible and flag non-stationarity or a failed detrend,
so they yield a warning rather than an error.
"""

from __future__ import annotations

import numpy as np

from .base import (
    DEFAULT_POLICY,
    WARN_NONSTATIONARY,
    EstimatorResult,
    ScalePoint,
    WindowPolicy,
    loglog_fit,
)
from .errors import WindowTooSmall, ZeroFluctuation
from .series import as_series, segment_matrix

__all__ = ["detrended_fluctuation", "dfa_statistic", "estimate_dfa", "DFA_MIN_WINDOW"]

# Hard floor for DFA windows: n = 3 leaves a single residual degree of
# freedom after the 2-parameter line fit and produces very noisy F.
DFA_MIN_WINDOW = 4


def _fluctuations(seg: np.ndarray) -> np.ndarray:
    """Per-row RMS residual of the cumulative profile about its OLS line."""
    n = seg.shape[1]
    profiles = np.cumsum(seg, axis=1)
    t = np.arange(1.0, n + 1.0)
    tc = t - t.mean()
    sxx = tc @ tc
    slopes = profiles @ tc / sxx
    intercepts = profiles.mean(axis=1) - slopes * t.mean()
    residuals = profiles - slopes[:, None] * t - intercepts[:, None]
    return np.sqrt((residuals * residuals).mean(axis=1))


def detrended_fluctuation(subseries) -> float:
    """RMS fluctuation of one subseries' cumulative profile about its trend line."""
    arr = as_series(subseries)
    if arr.shape[0] < 3:
        raise WindowTooSmall(f"DFA needs n >= 3, got {arr.shape[0]}")
    return float(_fluctuations(arr[None, :])[0])


def dfa_statistic(series, n: int) -> ScalePoint:
    """Mean fluctuation over all subseries of length n."""
    if n < 3:
        raise WindowTooSmall(f"DFA needs n >= 3, got {n}")
    arr = as_series(series)
    mean_f = float(_fluctuations(segment_matrix(arr, n)).mean())
    if mean_f == 0.0:
        raise ZeroFluctuation(
            f"mean fluctuation at n={n} is 0 (cumulative profile is linear)"
        )
    return ScalePoint(scale=n, statistic=mean_f)


def estimate_dfa(series, policy: WindowPolicy = DEFAULT_POLICY) -> EstimatorResult:
    """DFA Hurst estimate over the policy's window set."""
    arr = as_series(series)
    windows = policy.windows(arr.shape[0], min_window=DFA_MIN_WINDOW)
    points = [dfa_statistic(arr, n) for n in windows]
    fit = loglog_fit(points)
    warnings = (WARN_NONSTATIONARY,) if fit.slope > 1.0 else ()
    return EstimatorResult(
        method="DFA", hurst=fit.slope, fit=fit, points=tuple(points), warnings=warnings
    )
