"""Simulation grid driver: estimator bias and MSE on exponential data.

For every (lambda, N, iterations) cell the driver draws independent
Exponential(lambda) series, runs the three estimators, and aggregates the
mean estimate and the mean square error against the true value H = 0.5
(memoryless data has no long-range dependence). Iterations that fail inside
an estimator are counted per method and excluded from that method's
aggregates, so one pathological draw cannot void a 1000-iteration cell.

The harness defaults to the sample-SD rescaled range (see
:mod:`hurstlab.rs`): that is the convention under which the adjusted
statistic recenters independent data on H = 0.5.

Determinism: each iteration owns a pre-derived RNG stream and writes its
estimates into a slot indexed by iteration number; aggregation then runs
over those arrays in fixed order. Reports are therefore bit-identical for
any thread count.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .base import DEFAULT_POLICY, WindowPolicy
from .dfa import estimate_dfa
from .errors import CellFailed, EmptyEstimates, HurstLabError
from .rs import estimate_rsal
from .sampling import GENERATOR_NAME, ExponentialSpec, derive_stream, exponential_sample
from .vtp import estimate_vtp

__all__ = [
    "TRUE_HURST",
    "METHODS",
    "DEFAULT_LAMBDAS",
    "DEFAULT_SIZES",
    "DEFAULT_ITERATION_COUNTS",
    "SimulationCell",
    "MethodStats",
    "CellReport",
    "ReportMetadata",
    "SimulationReport",
    "mse",
    "make_grid",
    "run_cell",
    "run_grid",
]

# i.i.d. data has H = 0.5; every MSE in the comparison is measured against it.
TRUE_HURST = 0.5

METHODS = ("RSAL", "DFA", "VTP")

DEFAULT_LAMBDAS = (0.1, 0.5, 1.5, 3.0, 5.0, 7.0)
DEFAULT_SIZES = (128, 256, 512, 1024)
DEFAULT_ITERATION_COUNTS = (100, 500, 1000)


@dataclass(frozen=True)
class SimulationCell:
    """One (lambda, series length, iteration count) grid cell."""

    lam: float
    length: int
    iterations: int

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")


@dataclass(frozen=True)
class MethodStats:
    """Aggregates for one estimator within one cell."""

    mean_hurst: float
    mse: float
    failure_count: int


@dataclass(frozen=True, eq=True)
class CellReport:
    cell: SimulationCell
    methods: dict[str, MethodStats]


@dataclass(frozen=True)
class ReportMetadata:
    """Everything needed to reproduce the numbers, plus wall-clock timing.

    ``duration_seconds`` is informational and excluded from equality (and
    from the JSON serialization), so reports compare by content.
    """

    master_seed: int
    generator: str
    window_policy: WindowPolicy
    sd_mode: str
    vtp_divisors_only: bool
    artifact_version: str
    duration_seconds: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class SimulationReport:
    metadata: ReportMetadata
    cells: tuple[CellReport, ...]


def mse(estimates, true_h: float = TRUE_HURST) -> float:
    """Mean square error of a list of estimates against the true value."""
    arr = np.asarray(estimates, dtype=float)
    if arr.size == 0:
        raise EmptyEstimates("MSE over an empty list of estimates")
    return float(((arr - true_h) ** 2).mean())


def make_grid(lambdas=DEFAULT_LAMBDAS, sizes=DEFAULT_SIZES,
              iteration_counts=DEFAULT_ITERATION_COUNTS) -> list[SimulationCell]:
    """The cross-product cell list in configuration order."""
    return [
        SimulationCell(lam=lam, length=size, iterations=iters)
        for lam in lambdas
        for size in sizes
        for iters in iteration_counts
    ]


def _iteration_estimates(cell: SimulationCell, master_seed: int, cell_id: int,
                         iteration: int, policy: WindowPolicy, sd_mode: str,
                         vtp_divisors_only: bool) -> tuple[float, float, float]:
    """Hurst estimates (RSAL, DFA, VTP) for one draw; NaN marks a failure."""
    stream = derive_stream(master_seed, cell_id, iteration)
    series = exponential_sample(stream, ExponentialSpec(cell.lam, cell.length))
    out = []
    for run in (
        lambda: estimate_rsal(series, policy, sd_mode),
        lambda: estimate_dfa(series, policy),
        lambda: estimate_vtp(series, divisors_only=vtp_divisors_only),
    ):
        try:
            out.append(run().hurst)
        except HurstLabError:
            out.append(float("nan"))
    return tuple(out)


def run_cell(cell: SimulationCell, master_seed: int,
             policy: WindowPolicy = DEFAULT_POLICY, *, cell_id: int = 0,
             sd_mode: str = "sample", vtp_divisors_only: bool = False,
             threads: int = 1) -> CellReport:
    """Run one cell: draw, estimate, aggregate.

    Raises CellFailed if some method failed on every iteration.
    """
    estimates = np.full((cell.iterations, len(METHODS)), np.nan)

    def task(k: int):
        return _iteration_estimates(
            cell, master_seed, cell_id, k, policy, sd_mode, vtp_divisors_only
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for k, values in enumerate(pool.map(task, range(cell.iterations))):
                estimates[k] = values
    else:
        for k in range(cell.iterations):
            estimates[k] = task(k)

    methods = {}
    for j, method in enumerate(METHODS):
        column = estimates[:, j]
        valid = column[np.isfinite(column)]
        failures = cell.iterations - valid.size
        if valid.size == 0:
            raise CellFailed(
                f"{method} failed on all {cell.iterations} iterations of "
                f"(lambda={cell.lam}, N={cell.length})"
            )
        methods[method] = MethodStats(
            mean_hurst=float(valid.mean()),
            mse=mse(valid),
            failure_count=int(failures),
        )
    return CellReport(cell=cell, methods=methods)


def run_grid(cells, master_seed: int, policy: WindowPolicy = DEFAULT_POLICY, *,
             sd_mode: str = "sample", vtp_divisors_only: bool = False,
             threads: int = 1) -> SimulationReport:
    """Evaluate every cell and assemble the report in configuration order."""
    cells = list(cells)
    if not cells:
        raise EmptyEstimates("simulation grid has no cells")
    started = time.perf_counter()
    reports = tuple(
        run_cell(
            cell, master_seed, policy,
            cell_id=i, sd_mode=sd_mode,
            vtp_divisors_only=vtp_divisors_only, threads=threads,
        )
        for i, cell in enumerate(cells)
    )
    metadata = ReportMetadata(
        master_seed=master_seed,
        generator=GENERATOR_NAME,
        window_policy=policy,
        sd_mode=sd_mode,
        vtp_divisors_only=vtp_divisors_only,
        artifact_version=__version__,
        duration_seconds=time.perf_counter() - started,
    )
    return SimulationReport(metadata=metadata, cells=reports)
