"""Series-file parsing and report serialization (JSON, CSV, plot data).

JSON carries full double precision and round-trips to an equal in-memory
report; CSV lays the grid out for humans (lambda rows, one column per
series length, separate Hurst and MSE column groups) at 4 decimal places.
Plot-data files hold the mean estimate against lambda, one column per N,
one file per (method, iteration count). All numeric output is rendered
with locale-independent formatting.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .base import EstimatorResult, WindowPolicy
from .errors import SeriesParseError
from .montecarlo import (
    METHODS,
    CellReport,
    MethodStats,
    ReportMetadata,
    SimulationCell,
    SimulationReport,
)

__all__ = [
    "read_series_file",
    "report_to_json",
    "report_from_json",
    "report_to_csv",
    "plot_data_files",
    "estimates_to_json",
    "estimates_to_csv",
]


def read_series_file(path) -> np.ndarray:
    """Parse a series file: one decimal observation per line, '#' comments.

    Blank lines are ignored. Any other unparseable or non-finite line
    raises SeriesParseError carrying its 1-based line number.
    """
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                value = float(line)
            except ValueError:
                raise SeriesParseError(lineno, f"not a number: {line!r}") from None
            if not math.isfinite(value):
                raise SeriesParseError(lineno, f"non-finite value: {line!r}")
            values.append(value)
    return np.asarray(values, dtype=float)


# --- simulation reports -----------------------------------------------------


def _cell_dict(report: CellReport) -> dict:
    return {
        "lambda": report.cell.lam,
        "length": report.cell.length,
        "iterations": report.cell.iterations,
        "methods": {
            method: {
                "mean_hurst": stats.mean_hurst,
                "mse": stats.mse,
                "failure_count": stats.failure_count,
            }
            for method, stats in report.methods.items()
        },
    }


def report_to_json(report: SimulationReport) -> str:
    """Serialize a simulation report; deterministic for equal reports.

    Wall-clock duration is deliberately left out so identical configurations
    produce byte-identical files.
    """
    meta = report.metadata
    doc = {
        "metadata": {
            "master_seed": meta.master_seed,
            "generator": meta.generator,
            "window_policy": {
                "min_window": meta.window_policy.min_window,
                "max_window_rule": meta.window_policy.max_window_rule,
            },
            "sd_mode": meta.sd_mode,
            "vtp_divisors_only": meta.vtp_divisors_only,
            "artifact_version": meta.artifact_version,
        },
        "cells": [_cell_dict(c) for c in report.cells],
    }
    return json.dumps(doc, indent=2) + "\n"


def report_from_json(text: str) -> SimulationReport:
    """Inverse of :func:`report_to_json` (duration comes back as 0)."""
    doc = json.loads(text)
    meta = doc["metadata"]
    metadata = ReportMetadata(
        master_seed=meta["master_seed"],
        generator=meta["generator"],
        window_policy=WindowPolicy(
            min_window=meta["window_policy"]["min_window"],
            max_window_rule=meta["window_policy"]["max_window_rule"],
        ),
        sd_mode=meta["sd_mode"],
        vtp_divisors_only=meta["vtp_divisors_only"],
        artifact_version=meta["artifact_version"],
    )
    cells = []
    for cd in doc["cells"]:
        cell = SimulationCell(
            lam=cd["lambda"], length=cd["length"], iterations=cd["iterations"]
        )
        methods = {
            method: MethodStats(
                mean_hurst=md["mean_hurst"],
                mse=md["mse"],
                failure_count=md["failure_count"],
            )
            for method, md in cd["methods"].items()
        }
        cells.append(CellReport(cell=cell, methods=methods))
    return SimulationReport(metadata=metadata, cells=tuple(cells))


def _fmt4(x: float) -> str:
    return f"{x:.4f}"


def _grid_axes(report: SimulationReport):
    lambdas = sorted({c.cell.lam for c in report.cells})
    sizes = sorted({c.cell.length for c in report.cells})
    iteration_counts = sorted({c.cell.iterations for c in report.cells})
    by_key = {(c.cell.lam, c.cell.length, c.cell.iterations): c for c in report.cells}
    return lambdas, sizes, iteration_counts, by_key


def report_to_csv(report: SimulationReport) -> str:
    """Comparison tables: per method, lambda x iterations rows, N columns."""
    lambdas, sizes, iteration_counts, by_key = _grid_axes(report)
    lines = []
    for method in METHODS:
        lines.append(f"# method={method}")
        header = (
            ["lambda", "iterations"]
            + [f"hurst_N{size}" for size in sizes]
            + [f"mse_N{size}" for size in sizes]
        )
        lines.append(",".join(header))
        for lam in lambdas:
            for iters in iteration_counts:
                row = [f"{lam:g}", str(iters)]
                for attr in ("mean_hurst", "mse"):
                    for size in sizes:
                        cell = by_key.get((lam, size, iters))
                        if cell is None or method not in cell.methods:
                            row.append("")
                        else:
                            row.append(_fmt4(getattr(cell.methods[method], attr)))
                lines.append(",".join(row))
        lines.append("")
    return "\n".join(lines)


def plot_data_files(report: SimulationReport) -> dict[str, str]:
    """Plot-ready CSV bodies keyed by file name.

    One file per (method, iteration count): mean Hurst estimate against
    lambda, one column per series length. These are the data series behind
    estimate-vs-lambda comparison charts.
    """
    lambdas, sizes, iteration_counts, by_key = _grid_axes(report)
    files = {}
    for method in METHODS:
        for iters in iteration_counts:
            lines = [",".join(["lambda"] + [f"hurst_N{size}" for size in sizes])]
            for lam in lambdas:
                row = [f"{lam:g}"]
                for size in sizes:
                    cell = by_key.get((lam, size, iters))
                    if cell is None or method not in cell.methods:
                        row.append("")
                    else:
                        row.append(_fmt4(cell.methods[method].mean_hurst))
                lines.append(",".join(row))
            name = f"hurst_vs_lambda_{method.lower()}_iter{iters}.csv"
            files[name] = "\n".join(lines) + "\n"
    return files


# --- single-series estimates ------------------------------------------------


def _fmt6g(x: float) -> str:
    return f"{x:.6g}"


def estimates_to_json(results: list[EstimatorResult], input_path: str,
                      n_observations: int, options: dict) -> str:
    doc = {
        "input": input_path,
        "n_observations": n_observations,
        "options": options,
        "results": [
            {
                "method": r.method,
                "hurst": r.hurst,
                "fit": {
                    "slope": r.fit.slope,
                    "intercept": r.fit.intercept,
                    "n_points": r.fit.n_points,
                    "residual_rms": r.fit.residual_rms,
                },
                "points": [
                    {"scale": p.scale, "statistic": p.statistic} for p in r.points
                ],
                "warnings": list(r.warnings),
            }
            for r in results
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def estimates_to_csv(results: list[EstimatorResult]) -> str:
    """Summary table plus the regression points, at 6 significant digits."""
    lines = ["method,hurst,slope,intercept,residual_rms,n_points,warnings"]
    for r in results:
        lines.append(
            ",".join(
                [
                    r.method,
                    _fmt6g(r.hurst),
                    _fmt6g(r.fit.slope),
                    _fmt6g(r.fit.intercept),
                    _fmt6g(r.fit.residual_rms),
                    str(r.fit.n_points),
                    ";".join(r.warnings),
                ]
            )
        )
    lines.append("# points")
    lines.append("method,scale,statistic")
    for r in results:
        for p in r.points:
            lines.append(f"{r.method},{p.scale},{_fmt6g(p.statistic)}")
    return "\n".join(lines) + "\n"
