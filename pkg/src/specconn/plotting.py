"""Figures for sweep reports and sharpness scans (written to files only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .harness import SharpnessRow, SweepReport  # noqa: E402


def plot_sweep_summary(report: SweepReport, path: str) -> None:
    """Per-theorem counts on a log axis: applicable, hypothesis held,
    exception hits, inconsistencies."""
    ids = list(report.per_theorem)
    keys = ("applicable", "hypothesis", "exception_hits", "inconsistencies")
    x = np.arange(len(ids))
    width = 0.2
    fig, ax = plt.subplots(figsize=(max(6.0, 0.45 * len(ids)), 3.5))
    for i, key in enumerate(keys):
        counts = [report.per_theorem[t][key] for t in ids]
        ax.bar(x + (i - 1.5) * width, counts, width, label=key.replace("_", " "))
    ax.set_yscale("symlog", linthresh=1)
    ax.set_xticks(x)
    ax.set_xticklabels(ids, rotation=60)
    ax.set_ylabel("verdicts")
    cfg = report.config
    if cfg is not None:
        ax.set_title(f"n = {cfg.n_min}..{cfg.n_max}, {report.graphs_checked} graphs")
    ax.legend(fontsize="small", frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_sharpness(rows: list[SharpnessRow], path: str) -> None:
    """Observed value against the bound for each delta of a scan."""
    if not rows:
        raise ValueError("nothing to plot")
    deltas = [r.delta for r in rows]
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    ax.plot(deltas, [r.bound for r in rows], "k--", marker="o", mfc="none", label="bound")
    ax.plot(deltas, [r.observed for r in rows], marker="x", ls="", label="observed")
    for r in rows:
        ax.annotate(f"{r.margin:+.3g}", (r.delta, r.observed), textcoords="offset points",
                    xytext=(4, -10), fontsize="x-small")
    ax.set_xticks(deltas)
    ax.set_xlabel("delta")
    ax.set_ylabel("rho" if rows[0].id == "T3.4" else "edges")
    ax.set_title(f"{rows[0].id} boundary")
    ax.legend(fontsize="small", frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
