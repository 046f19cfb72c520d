"""Rescaled range (R/S) and adjusted rescaled range (R/Sal) Hurst estimation.

The plain estimator regresses log of the mean rescaled range on log of the
window length. Because the finite-sample expectation of the rescaled range
deviates badly from the asymptotic 0.5 power law at small windows, the
adjusted estimator re-centers each statistic on its independent-data
expectation first:

    (R/Sal)_n = (R/S)_n - E(R/S)_n + sqrt(0.5 * pi * n)

where E(R/S)_n is the Anis-Lloyd small-sample expectation with the Peters
(n - 1/2)/n prefactor. On independent data the adjusted statistic scales as
sqrt(0.5 * pi * n), so the fitted slope lands on 0.5 regardless of how short
the series is; that calibration is what makes R/Sal the low-MSE method in
the Monte Carlo comparison this package reproduces.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .base import DEFAULT_POLICY, EstimatorResult, ScalePoint, WindowPolicy, loglog_fit
from .errors import AllSubseriesDegenerate, InvalidWindow, NonPositiveStatistic
from .series import SD_MODES, as_series, segment_matrix

__all__ = [
    "rescaled_range",
    "rs_statistic",
    "expected_rs",
    "adjust_rs_points",
    "estimate_rs",
    "estimate_rsal",
]


def rescaled_range(subseries, sd_mode: str = "population") -> float | None:
    """R/S of one subseries: range of the centered cumulative sum over the SD.

    Returns None (degenerate) when the standard deviation is 0; callers
    exclude such subseries from the per-window average.
    """
    arr = as_series(subseries)
    std = arr.std(ddof=SD_MODES[sd_mode])
    if std == 0.0:
        return None
    profile = np.cumsum(arr - arr.mean())
    return float((profile.max() - profile.min()) / std)


def rs_statistic(series, n: int, sd_mode: str = "population") -> ScalePoint:
    """Mean rescaled range over all subseries of length n.

    Degenerate subseries (zero SD) are dropped from the average; if every
    subseries is degenerate the window is unusable and
    AllSubseriesDegenerate is raised.
    """
    arr = as_series(series)
    seg = segment_matrix(arr, n)
    means = seg.mean(axis=1)
    stds = seg.std(axis=1, ddof=SD_MODES[sd_mode])
    profiles = np.cumsum(seg - means[:, None], axis=1)
    ranges = profiles.max(axis=1) - profiles.min(axis=1)
    ok = stds > 0.0
    if not ok.any():
        raise AllSubseriesDegenerate(f"all {seg.shape[0]} subseries at n={n} have zero SD")
    return ScalePoint(scale=n, statistic=float((ranges[ok] / stds[ok]).mean()))


@lru_cache(maxsize=None)
def expected_rs(n: int) -> float:
    """Small-sample expectation E(R/S)_n of the rescaled range for i.i.d. data.

    Anis-Lloyd formula with the Peters (n - 1/2)/n prefactor; the gamma-ratio
    factor switches to its asymptotic form 1/sqrt(n*pi/2) above n = 340,
    where the exact ratio and the asymptote agree to well under a percent.
    Evaluated through log-gamma so large n cannot overflow.
    """
    if n < 2:
        raise InvalidWindow(f"expected_rs needs n >= 2, got {n}")
    if n <= 340:
        factor = math.exp(math.lgamma((n - 1) / 2.0) - math.lgamma(n / 2.0)) / math.sqrt(math.pi)
    else:
        factor = 1.0 / math.sqrt(n * math.pi / 2.0)
    i = np.arange(1, n)
    tail_sum = float(np.sqrt((n - i) / i).sum())
    return (n - 0.5) / n * factor * tail_sum


def _rs_points(series, policy: WindowPolicy, sd_mode: str) -> list[ScalePoint]:
    arr = as_series(series)
    return [rs_statistic(arr, n, sd_mode) for n in policy.windows(arr.shape[0])]


def adjust_rs_points(points) -> list[ScalePoint]:
    """Apply the small-sample correction to plain R/S scale points.

    Raises NonPositiveStatistic if any corrected value is <= 0 (its log
    would be undefined). With E(R/S)_n < sqrt(0.5*pi*n), which holds
    throughout the supported range, this cannot happen for real R/S values;
    the check guards pathological or synthetic inputs.
    """
    adjusted = []
    bad = []
    for p in points:
        value = p.statistic - expected_rs(p.scale) + math.sqrt(0.5 * math.pi * p.scale)
        if value <= 0.0:
            bad.append(p.scale)
        adjusted.append(ScalePoint(scale=p.scale, statistic=value))
    if bad:
        raise NonPositiveStatistic(f"adjusted R/S <= 0 at n={bad}; cannot take logs")
    return adjusted


def estimate_rs(series, policy: WindowPolicy = DEFAULT_POLICY,
                sd_mode: str = "sample") -> EstimatorResult:
    """Plain (uncorrected) R/S estimate; biased high on short series.

    The estimators default to the sample-SD rescaled range: the
    Anis-Lloyd/Peters expectation that calibrates the adjusted variant is
    an expectation of the sample-SD statistic, and only that pairing
    recenters independent data on H = 0.5. The low-level statistic ops keep
    the classical population default.
    """
    points = _rs_points(series, policy, sd_mode)
    fit = loglog_fit(points)
    return EstimatorResult(method="RS", hurst=fit.slope, fit=fit, points=tuple(points))


def estimate_rsal(series, policy: WindowPolicy = DEFAULT_POLICY,
                  sd_mode: str = "sample") -> EstimatorResult:
    """Adjusted rescaled range (R/Sal) estimate; see :func:`estimate_rs`
    for the sd_mode default."""
    points = adjust_rs_points(_rs_points(series, policy, sd_mode))
    fit = loglog_fit(points)
    return EstimatorResult(method="RSAL", hurst=fit.slope, fit=fit, points=tuple(points))
