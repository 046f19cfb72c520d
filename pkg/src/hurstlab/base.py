"""Shared estimator plumbing: scale points, results, and the window policy.

The three estimators all reduce a series to (scale, statistic) pairs and
regress log(statistic) on log(scale); what differs is the statistic and how
the Hurst exponent is read off the slope. The types here carry that shared
structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InsufficientWindows
from .regression import RegressionFit, ols_fit

__all__ = [
    "ScalePoint",
    "EstimatorResult",
    "WindowPolicy",
    "DEFAULT_POLICY",
    "WARN_NONSTATIONARY",
    "divisors",
    "loglog_fit",
]

# Warning code attached by DFA when the fitted exponent exceeds 1.
WARN_NONSTATIONARY = "NONSTATIONARY_OR_DETREND_FAIL"

MAX_WINDOW_RULES = ("half-N", "full-N")


@dataclass(frozen=True)
class ScalePoint:
    """One (scale, statistic) pair feeding a log-log regression."""

    scale: int
    statistic: float


@dataclass(frozen=True)
class EstimatorResult:
    """Outcome of one Hurst estimation run.

    ``hurst`` is the method's mapping of ``fit.slope``: the identity for
    RS/RSAL/DFA, 1 - beta/2 with beta = -slope for VTP.
    """

    method: str
    hurst: float
    fit: RegressionFit
    points: tuple[ScalePoint, ...]
    warnings: tuple[str, ...] = ()


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class WindowPolicy:
    """Rule selecting the subseries lengths n used as regression abscissae.

    The window set is every integral divisor n of N with
    ``min_window <= n <= max``, where max is N/2 (``half-N``, the default)
    or N itself (``full-N``). The default starts at n = 2: the small-sample
    R/S correction is exact down to the shortest windows, and the n = 2
    point anchors the regression enough to matter for the estimator's MSE
    on short series. DFA applies its own higher floor.
    """

    min_window: int = 2
    max_window_rule: str = "half-N"

    def __post_init__(self):
        if self.min_window < 2:
            raise ValueError(f"min_window must be >= 2, got {self.min_window}")
        if self.max_window_rule not in MAX_WINDOW_RULES:
            raise ValueError(
                f"max_window_rule must be one of {MAX_WINDOW_RULES}, "
                f"got {self.max_window_rule!r}"
            )

    def max_window(self, n_obs: int) -> int:
        return n_obs if self.max_window_rule == "full-N" else n_obs // 2

    def windows(self, n_obs: int, min_window: int | None = None) -> list[int]:
        """Window lengths for a series of length *n_obs*, ascending.

        Raises InsufficientWindows when fewer than 2 qualify (a log-log
        regression needs at least two distinct scales).
        """
        lo = max(self.min_window, min_window or 0)
        hi = self.max_window(n_obs)
        wins = [d for d in divisors(n_obs) if lo <= d <= hi]
        if len(wins) < 2:
            raise InsufficientWindows(
                f"policy yields {len(wins)} window(s) for N={n_obs} "
                f"(need >= 2; divisors of N in [{lo}, {hi}])"
            )
        return wins


DEFAULT_POLICY = WindowPolicy()


def loglog_fit(points: list[ScalePoint]) -> RegressionFit:
    """OLS fit of log(statistic) against log(scale)."""
    xy = np.log([(p.scale, p.statistic) for p in points])
    return ols_fit(xy)
