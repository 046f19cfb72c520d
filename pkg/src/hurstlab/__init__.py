"""hurstlab: Hurst exponent estimation and Monte Carlo estimator comparison.

Three estimators for the self-similarity parameter H of a time series --
adjusted rescaled range (R/Sal), detrended fluctuation analysis (DFA), and
the variance-time plot (VTP) -- plus a seeded simulation harness that
measures their bias and mean square error on i.i.d. exponential data, where
the true value is H = 0.5.
"""

__version__ = "0.1.0"

from .base import DEFAULT_POLICY, EstimatorResult, ScalePoint, WindowPolicy
from .dfa import detrended_fluctuation, dfa_statistic, estimate_dfa
from .errors import HurstLabError
from .montecarlo import (
    DEFAULT_ITERATION_COUNTS,
    DEFAULT_LAMBDAS,
    DEFAULT_SIZES,
    CellReport,
    MethodStats,
    SimulationCell,
    SimulationReport,
    make_grid,
    mse,
    run_cell,
    run_grid,
)
from .regression import RegressionFit, fit_line_to_profile, ols_fit
from .rs import estimate_rs, estimate_rsal, expected_rs, rescaled_range, rs_statistic
from .sampling import ExponentialSpec, RngStream, derive_stream, exponential_sample
from .series import (
    SubseriesStats,
    as_series,
    centered_cumsum,
    partition,
    plain_cumsum,
    range_of,
    subseries_stats,
)
from .vtp import AggregationScale, aggregate, aggregated_variance, estimate_vtp

__all__ = [
    "__version__",
    "HurstLabError",
    "ScalePoint",
    "EstimatorResult",
    "WindowPolicy",
    "DEFAULT_POLICY",
    "SubseriesStats",
    "as_series",
    "partition",
    "subseries_stats",
    "centered_cumsum",
    "plain_cumsum",
    "range_of",
    "RegressionFit",
    "ols_fit",
    "fit_line_to_profile",
    "rescaled_range",
    "rs_statistic",
    "expected_rs",
    "estimate_rs",
    "estimate_rsal",
    "detrended_fluctuation",
    "dfa_statistic",
    "estimate_dfa",
    "AggregationScale",
    "aggregate",
    "aggregated_variance",
    "estimate_vtp",
    "RngStream",
    "ExponentialSpec",
    "derive_stream",
    "exponential_sample",
    "SimulationCell",
    "MethodStats",
    "CellReport",
    "SimulationReport",
    "mse",
    "make_grid",
    "run_cell",
    "run_grid",
    "DEFAULT_LAMBDAS",
    "DEFAULT_SIZES",
    "DEFAULT_ITERATION_COUNTS",
]
