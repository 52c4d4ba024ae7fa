"""Render a convergence figure from estimation-run CSV traces.

Consumes the files emitted by the estimator CLI:
  - trace.csv   (header: run,iter,estimate) — per-run estimate traces
  - mc_mean.csv (header: iter,mean_estimate,std_estimate) — Monte Carlo mean

Layout: dashed single-run trace (run 0), solid MC mean, and an optional
dashed horizontal reference line at the exact gap value.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "nugap-figs"  # deterministic SVG ids
import matplotlib.pyplot as plt  # noqa: E402

TRACE_HEADER = ["run", "iter", "estimate"]
MC_HEADER = ["iter", "mean_estimate", "std_estimate"]


class CsvFormatError(ValueError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    trace_path: str | None
    mc_mean_path: str | None
    oracle_value: float | None
    title: str
    output_image: str


def _read_rows(path, header):
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise CsvFormatError(f"{path}: {exc}") from exc
    if not rows or rows[0] != header:
        raise CsvFormatError(
            f"{path}: expected header {','.join(header)}"
        )
    if len(rows) == 1:
        raise CsvFormatError(f"{path}: no data rows")
    try:
        return [[float(v) for v in row] for row in rows[1:]]
    except ValueError as exc:
        raise CsvFormatError(f"{path}: non-numeric value ({exc})") from exc


def read_trace(path):
    """First-run trace as (iterations, estimates)."""
    rows = _read_rows(path, TRACE_HEADER)
    first = min(r[0] for r in rows)
    picked = [(int(r[1]), r[2]) for r in rows if r[0] == first]
    picked.sort()
    return [it for it, _ in picked], [v for _, v in picked]


def read_mc_mean(path):
    rows = _read_rows(path, MC_HEADER)
    rows.sort(key=lambda r: r[0])
    return [int(r[0]) for r in rows], [r[1] for r in rows]


def plot_convergence(spec):
    if spec.trace_path is None and spec.mc_mean_path is None:
        raise CsvFormatError("nothing to plot: give --trace and/or --mc")
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    if spec.trace_path is not None:
        its, vals = read_trace(spec.trace_path)
        ax.plot(its, vals, "--", color="tab:blue", label="single run")
    if spec.mc_mean_path is not None:
        its, means = read_mc_mean(spec.mc_mean_path)
        ax.plot(its, means, "-", color="tab:orange", label="MC mean")
    if spec.oracle_value is not None:
        ax.axhline(
            spec.oracle_value, linestyle="--", color="tab:gray",
            label=f"exact = {spec.oracle_value:.4f}",
        )
    ax.set_xlabel("iteration")
    ax.set_ylabel("gap estimate")
    ax.set_ylim(0.0, 1.05)
    ax.set_title(spec.title)
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(spec.output_image, metadata=_stable_metadata(spec.output_image))
    plt.close(fig)


def _stable_metadata(path):
    # strip timestamps so identical inputs give identical bytes
    if path.endswith(".svg"):
        return {"Date": None}
    if path.endswith(".png"):
        return {"Software": None}
    if path.endswith((".pdf", ".ps", ".eps")):
        return {"CreationDate": None}
    return None


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="plot_convergence",
        description="Plot gap-estimate convergence from CSV traces",
    )
    parser.add_argument("--trace", default=None, help="trace.csv path")
    parser.add_argument("--mc", default=None, help="mc_mean.csv path")
    parser.add_argument("--oracle", type=float, default=None,
                        help="exact gap value for the reference line")
    parser.add_argument("--title", default="Gap estimate convergence")
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)
    spec = FigureSpec(args.trace, args.mc, args.oracle, args.title, args.out)
    try:
        plot_convergence(spec)
    except (CsvFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
