"""Matplotlib rendering for the report path.

Verification runs drop one PNG per statement plus an index figure next to
the JSON/TSV output.  Layouts are deterministic (circular embedding), so
re-runs produce identical figures.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

PASS_COLOR = "#2e7d32"
FAIL_COLOR = "#c62828"
MISSING_COLOR = "#9e9e9e"

_STATUS_COLORS = {"pass": PASS_COLOR, "fail": FAIL_COLOR, "data-missing": MISSING_COLOR}


def draw_graph(ax, g, labels=None, node_color="#1565c0"):
    """Circular layout; vertex i sits at angle 2*pi*i/n."""
    n = g.n
    pos = {
        v: (math.cos(2 * math.pi * v / max(n, 1) + math.pi / 2),
            math.sin(2 * math.pi * v / max(n, 1) + math.pi / 2))
        for v in range(n)
    }
    for u, v in g.edges():
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]],
                color="#78909c", lw=1.1, zorder=1)
    xs = [pos[v][0] for v in range(n)]
    ys = [pos[v][1] for v in range(n)]
    ax.scatter(xs, ys, s=260, color=node_color, zorder=2, edgecolors="white")
    names = {}
    if labels:
        names = {v: k for k, v in labels.items()}
    for v in range(n):
        ax.text(pos[v][0], pos[v][1], names.get(v, str(v)),
                ha="center", va="center", color="white", fontsize=6, zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")


def statement_figure(report, base, path: Path) -> None:
    """One statement: base graph (when there is one) plus the case tally."""
    fig, axes = plt.subplots(1, 2, figsize=(8, 3.6),
                             gridspec_kw={"width_ratios": [1, 1.3]})
    if base is not None:
        draw_graph(axes[0], base.graph, base.labels)
        axes[0].set_title(base.name, fontsize=9)
    else:
        axes[0].axis("off")
    npass = sum(1 for o in report.outcomes if o.ok)
    nfail = len(report.outcomes) - npass
    axes[1].barh(["pass", "fail"], [npass, nfail], color=[PASS_COLOR, FAIL_COLOR])
    axes[1].set_xlim(0, max(npass + nfail, 1) * 1.15)
    for i, v in enumerate([npass, nfail]):
        axes[1].text(v, i, f" {v}", va="center", fontsize=9)
    sym = ("" if report.cases_up_to_symmetry is None
           else f", {report.cases_up_to_symmetry} up to symmetry")
    axes[1].set_title(f"{report.statement_id}: {report.status}\n"
                      f"{report.cases_total} cases{sym}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def index_figure(reports, path: Path) -> None:
    """Pass/fail overview across all statements."""
    if not reports:
        return
    names = [r.statement_id for r in reports]
    checked = [len(r.outcomes) for r in reports]
    colors = [_STATUS_COLORS.get(r.status, FAIL_COLOR) for r in reports]
    fig, ax = plt.subplots(figsize=(8, 0.34 * len(reports) + 1.4))
    ax.barh(range(len(reports)), [max(c, 1) for c in checked], color=colors)
    ax.set_yticks(range(len(reports)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("checked cases", fontsize=8)
    for i, r in enumerate(reports):
        ax.text(max(checked[i], 1), i, f" {r.status} ({r.elapsed_s:.1f}s)",
                va="center", fontsize=7)
    ax.set_title("verification summary", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def sweep_figure(counts: dict, path: Path) -> None:
    keys = ["scanned", "filtered_in", "passed", "failed", "timed_out"]
    vals = [counts.get(k, 0) for k in keys]
    colors = ["#546e7a", "#1565c0", PASS_COLOR, FAIL_COLOR, "#ef6c00"]
    fig, ax = plt.subplots(figsize=(6, 3))
    ax.bar(keys, vals, color=colors)
    for i, v in enumerate(vals):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=8)
    ax.set_title("sweep result", fontsize=10)
    ax.tick_params(axis="x", labelsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
