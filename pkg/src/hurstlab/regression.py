"""Ordinary least-squares line fitting.

One implementation serves both jobs in this package: the log-log slope
regressions that produce the Hurst estimates, and the within-window linear
detrending inside DFA. Sums are centered (x - x_bar, y - y_bar) before any
products are formed, which keeps the fit stable on the tightly clustered
log-scale abscissae that show up at N = 1024.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDesign

__all__ = ["RegressionFit", "ols_fit", "fit_line_to_profile"]


@dataclass(frozen=True)
class RegressionFit:
    """Slope/intercept of a least-squares line plus residual diagnostics."""

    slope: float
    intercept: float
    n_points: int
    residual_rms: float


def ols_fit(points) -> RegressionFit:
    """Fit y = slope*x + intercept by ordinary least squares.

    *points* is any sequence of (x, y) pairs. Raises DegenerateDesign when
    there are fewer than 2 points or all x coincide.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DegenerateDesign(f"expected (x, y) pairs, got shape {pts.shape}")
    x, y = pts[:, 0], pts[:, 1]
    return _fit_xy(x, y)


def _fit_xy(x: np.ndarray, y: np.ndarray) -> RegressionFit:
    n = x.shape[0]
    if n < 2:
        raise DegenerateDesign(f"need >= 2 points, got {n}")
    xc = x - x.mean()
    sxx = float(xc @ xc)
    if sxx == 0.0:
        raise DegenerateDesign("all x values are identical")
    yc = y - y.mean()
    slope = float(xc @ yc) / sxx
    intercept = float(y.mean() - slope * x.mean())
    residuals = y - (slope * x + intercept)
    return RegressionFit(
        slope=slope,
        intercept=intercept,
        n_points=int(n),
        residual_rms=float(np.sqrt(residuals @ residuals / n)),
    )


def fit_line_to_profile(profile) -> RegressionFit:
    """OLS fit of a cumulative profile against t = 1, ..., n."""
    y = np.asarray(profile, dtype=float)
    if y.ndim != 1:
        raise DegenerateDesign(f"profile must be 1-D, got shape {y.shape}")
    t = np.arange(1.0, y.shape[0] + 1.0)
    return _fit_xy(t, y)
