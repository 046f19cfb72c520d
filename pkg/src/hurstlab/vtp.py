"""Variance-time plot (aggregated variance) Hurst estimation.

The series is averaged over non-overlapping blocks of size w; for
self-similar processes the variance of the block means decays as
c * w**(-beta), so the slope of log-variance against log-w is -beta and
H = 1 - beta/2. Unlike the R/S and DFA pipelines, w is not restricted to
divisors of N: a trailing remainder of fewer than w observations is simply
discarded. Block sizes up to N/2 are accepted; the default regression set
stops at N/4 (see :func:`aggregation_scales`).

Block means for all scales of one series are computed in a single pass from
the cumulative sum, with the gather/segment index arrays cached per series
length; this is what keeps the 72-cell simulation grid fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .base import EstimatorResult, ScalePoint, loglog_fit
from .errors import InsufficientScales, ScaleTooLarge, ZeroVariance
from .series import as_series

__all__ = [
    "AggregationScale",
    "aggregation_scales",
    "aggregate",
    "aggregated_variance",
    "estimate_vtp",
]


@dataclass(frozen=True)
class AggregationScale:
    """Block size w and the number of complete blocks floor(N/w)."""

    w: int
    block_count: int


@lru_cache(maxsize=16)
def _default_ws(n_obs: int, divisors_only: bool) -> tuple[int, ...]:
    if divisors_only:
        return tuple(w for w in range(1, n_obs // 4 + 1) if n_obs % w == 0)
    return tuple(range(1, n_obs // 4 + 1))


def aggregation_scales(n_obs: int, divisors_only: bool = False) -> list[AggregationScale]:
    """Default scale set: every integer w from 1 to N/4.

    Block sizes up to N/2 are valid, but the default stops at N/4 so every
    scale keeps at least 4 complete blocks: the log of a 2- or 3-block
    variance is so skewed that including those scales drags the fitted
    decay rate far below the true one. With ``divisors_only`` the set is
    further restricted to divisors of N, for which no observations are
    discarded.
    """
    return [
        AggregationScale(w=w, block_count=n_obs // w)
        for w in _default_ws(n_obs, divisors_only)
    ]


def _check_scale(n_obs: int, w: int) -> int:
    if w < 1:
        raise ScaleTooLarge(f"block size must be >= 1, got {w}")
    if w > n_obs // 2:
        raise ScaleTooLarge(f"block size w={w} exceeds N/2 = {n_obs // 2}")
    return n_obs // w


def aggregate(series, w: int) -> np.ndarray:
    """Means of consecutive non-overlapping blocks of size w.

    Keeps the floor(N/w) complete blocks; trailing remainder observations
    are discarded.
    """
    arr = as_series(series)
    nb = _check_scale(arr.shape[0], w)
    return arr[: nb * w].reshape(nb, w).mean(axis=1)


def aggregated_variance(series, w: int) -> ScalePoint:
    """Variance of the w-aggregated series about the grand mean.

    The reference mean is the sample mean of the ORIGINAL series (for
    divisor w it coincides with the mean of the block means); the
    denominator is the block count.
    """
    arr = as_series(series)
    blocks = aggregate(arr, w)
    var = float(((blocks - arr.mean()) ** 2).mean())
    if var == 0.0:
        raise ZeroVariance(f"aggregated variance at w={w} is 0; cannot take logs")
    return ScalePoint(scale=w, statistic=var)


@lru_cache(maxsize=16)
def _gather_plan(n_obs: int, ws: tuple[int, ...]):
    """Index arrays that turn one padded cumsum into all blocks of all scales."""
    starts, ends, widths = [], [], []
    seg_starts, counts = [], []
    pos = 0
    for w in ws:
        nb = n_obs // w
        edges = w * np.arange(nb + 1)
        starts.append(edges[:-1])
        ends.append(edges[1:])
        widths.append(np.full(nb, float(w)))
        seg_starts.append(pos)
        counts.append(nb)
        pos += nb
    return (
        np.concatenate(starts),
        np.concatenate(ends),
        np.concatenate(widths),
        np.array(seg_starts),
        np.array(counts, dtype=float),
    )


def _scale_variances(arr: np.ndarray, ws: tuple[int, ...]) -> np.ndarray:
    starts, ends, widths, seg_starts, counts = _gather_plan(arr.shape[0], ws)
    cs = np.concatenate(([0.0], np.cumsum(arr)))
    block_means = (cs[ends] - cs[starts]) / widths
    sq = (block_means - arr.mean()) ** 2
    return np.add.reduceat(sq, seg_starts) / counts


def estimate_vtp(series, scales=None, divisors_only: bool = False) -> EstimatorResult:
    """VTP Hurst estimate: H = 1 - beta/2 from the log-log variance decay.

    *scales* may be a list of AggregationScale (or plain block sizes); by
    default every w in [1, N/4] is used (see :func:`aggregation_scales`).
    """
    arr = as_series(series)
    n_obs = arr.shape[0]
    if scales is None:
        ws = _default_ws(n_obs, divisors_only)
    else:
        ws = tuple(getattr(s, "w", s) for s in scales)
        for w in ws:
            _check_scale(n_obs, w)
    if len(set(ws)) < 2:
        raise InsufficientScales(f"need >= 2 distinct block sizes, got {sorted(set(ws))}")
    variances = _scale_variances(arr, ws)
    zero = [w for w, v in zip(ws, variances) if v == 0.0]
    if zero:
        raise ZeroVariance(f"aggregated variance is 0 at w={zero}; cannot take logs")
    points = [ScalePoint(scale=w, statistic=float(v)) for w, v in zip(ws, variances)]
    fit = loglog_fit(points)
    beta = -fit.slope
    return EstimatorResult(
        method="VTP", hurst=1.0 - beta / 2.0, fit=fit, points=tuple(points)
    )
