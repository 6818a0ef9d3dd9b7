"""Delimited tables and matplotlib figures for corpus runs."""

from __future__ import annotations

import csv
from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .runner import RunReport  # noqa: E402

CSV_FIELDS = ["index", "name", "expected", "order", "involution_count", "oracle",
              "verdict", "params", "agree", "expected_ok", "invariant_failures",
              "error", "seconds"]

VERDICT_COLORS = {"NotPyramidal": "0.55", "Case1": "tab:blue", "Case2": "tab:red",
                  "Case3": "tab:green", "": "black"}


def write_csv(report: RunReport, path: str | Path, delimiter: str = ",") -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, delimiter=delimiter)
        w.writerow(CSV_FIELDS)
        for e in report.entries:
            params = ";".join(f"{k}={v}" for k, v in sorted(e.params.items())
                              if k != "reason")
            w.writerow([e.index, e.name, e.expected, e.order, e.involution_count,
                        int(e.oracle), e.verdict, params, int(e.agree), int(e.expected_ok),
                        ";".join(e.invariant_failures), e.error, f"{e.seconds:.4f}"])
    return path


def plot_timings(report: RunReport, path: str | Path) -> Path:
    """Classification time against group order, coloured by verdict."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for verdict, color in VERDICT_COLORS.items():
        pts = [(e.order, e.seconds) for e in report.entries if e.verdict == verdict and e.order]
        if pts:
            xs, ys = zip(*pts)
            ax.scatter(xs, ys, s=18, c=color, label=verdict or "error", alpha=0.85)
    bad = [(e.order, e.seconds) for e in report.entries if not e.agree and e.order]
    if bad:
        xs, ys = zip(*bad)
        ax.scatter(xs, ys, s=60, facecolors="none", edgecolors="black", label="disagreement")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("group order")
    ax.set_ylabel("seconds per group")
    ax.set_title(f"corpus '{report.profile}': {len(report.entries)} groups, "
                 f"{report.disagreements} disagreements")
    ax.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def plot_verdicts(report: RunReport, path: str | Path) -> Path:
    counts = Counter(e.verdict or "error" for e in report.entries)
    labels = [v for v in ("NotPyramidal", "Case1", "Case2", "Case3", "error") if counts[v]]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar(labels, [counts[v] for v in labels],
           color=[VERDICT_COLORS.get(v, "black") for v in labels])
    for i, v in enumerate(labels):
        ax.text(i, counts[v], str(counts[v]), ha="center", va="bottom", fontsize=9)
    ax.set_ylabel("groups")
    ax.set_title(f"verdicts, corpus '{report.profile}'")
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def write_report_dir(report: RunReport, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"corpus_{report.profile}"
    return [write_csv(report, out / f"{stem}.csv"),
            plot_timings(report, out / f"{stem}_timings.png"),
            plot_verdicts(report, out / f"{stem}_verdicts.png")]
