"""
Monte Carlo comparison of the three estimators
==============================================

Runs a reduced simulation grid (two rates, two lengths, 200 iterations)
and prints the per-cell mean estimate and mean square error against the
true value H = 0.5. The adjusted rescaled range comes out an order of
magnitude more efficient than DFA, which in turn beats the variance-time
plot; the full shipped grid (six rates, four lengths, up to 1000
iterations) is available through `hurstlab simulate`.

Also writes the plot-ready CSV files (mean estimate against lambda, one
column per series length) into ./comparison_output/.
"""

from pathlib import Path

from hurstlab import make_grid, run_grid
from hurstlab.montecarlo import METHODS
from hurstlab.report import plot_data_files, report_to_csv

cells = make_grid(lambdas=[0.5, 3.0], sizes=[128, 1024], iteration_counts=[200])
report = run_grid(cells, master_seed=42, threads=1)
print(f"{len(report.cells)} cells in {report.metadata.duration_seconds:.1f}s "
      f"(generator: {report.metadata.generator})")

print(f"\n{'lambda':>7} {'N':>5} | " + " | ".join(f"{m:^22}" for m in METHODS))
print(f"{'':>7} {'':>5} | " + " | ".join(f"{'mean H':>10} {'MSE':>11}" for _ in METHODS))
for cell_report in report.cells:
    cell = cell_report.cell
    row = " | ".join(
        f"{cell_report.methods[m].mean_hurst:10.4f} {cell_report.methods[m].mse:11.5f}"
        for m in METHODS
    )
    print(f"{cell.lam:7.1f} {cell.length:5d} | {row}")

out_dir = Path("comparison_output")
out_dir.mkdir(exist_ok=True)
(out_dir / "report.csv").write_text(report_to_csv(report), encoding="utf-8")
for name, body in plot_data_files(report).items():
    (out_dir / name).write_text(body, encoding="utf-8")
print(f"\nwrote report.csv and {len(plot_data_files(report))} plot-data files to {out_dir}/")
