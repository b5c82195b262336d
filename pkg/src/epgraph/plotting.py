"""Figure rendering for the report paths.

Every plot is written straight to a file with the Agg backend; nothing
here opens a window.
"""

from __future__ import annotations

import math
from collections import OrderedDict

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .graphs import SimpleGraph  # noqa: E402
from .report import MatchingEstimate, VerificationRow  # noqa: E402

_FORMULA_STYLE = dict(color="tab:blue", marker="o", linestyle="-", label="formula")
_ORACLE_STYLE = dict(color="tab:orange", marker="x", linestyle="none", label="oracle")


def save_graph_figure(graph: SimpleGraph, path: str, labels=None, title: str | None = None) -> None:
    """Draw the graph on a circular layout and save it."""
    n = graph.n
    xs = [math.cos(2 * math.pi * v / max(n, 1)) for v in range(n)]
    ys = [math.sin(2 * math.pi * v / max(n, 1)) for v in range(n)]
    fig, ax = plt.subplots(figsize=(6, 6))
    for u, v in graph.edges():
        ax.plot([xs[u], xs[v]], [ys[u], ys[v]], color="0.7", linewidth=0.8, zorder=1)
    ax.scatter(xs, ys, s=120, color="steelblue", zorder=2)
    if labels is not None and n <= 48:
        for v in range(n):
            ax.annotate(str(labels[v]), (xs[v] * 1.12, ys[v] * 1.12),
                        ha="center", va="center", fontsize=8)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _plot_value(value) -> tuple[float, float]:
    """(midpoint, half-width) for plotting; exact values have zero width."""
    if isinstance(value, MatchingEstimate):
        return (value.lower + value.upper) / 2, (value.upper - value.lower) / 2
    return float(value), 0.0


def save_verification_figure(rows: list[VerificationRow], path: str,
                             title: str | None = None) -> None:
    """One panel per invariant: formula curve vs oracle points, mismatches red."""
    groups: "OrderedDict[str, int]" = OrderedDict()
    invariants: "OrderedDict[str, list[VerificationRow]]" = OrderedDict()
    for row in rows:
        groups.setdefault(row.group, len(groups))
        invariants.setdefault(row.invariant, []).append(row)
    if not invariants:
        fig, ax = plt.subplots(figsize=(4, 3))
        ax.text(0.5, 0.5, "no rows", ha="center", va="center")
        ax.axis("off")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        return

    ncols = min(3, len(invariants))
    nrows = math.ceil(len(invariants) / ncols)
    fig, axes = plt.subplots(nrows, ncols, figsize=(4.2 * ncols, 3.2 * nrows),
                             squeeze=False)
    for k, (name, inv_rows) in enumerate(invariants.items()):
        ax = axes[k // ncols][k % ncols]
        xs = [groups[r.group] for r in inv_rows]
        f_mid, f_err = zip(*(_plot_value(r.formula) for r in inv_rows))
        ax.errorbar(xs, f_mid, yerr=f_err, **_FORMULA_STYLE)
        oracle_pts = [(x, r.oracle) for x, r in zip(xs, inv_rows) if r.oracle is not None]
        if oracle_pts:
            ax.plot([p[0] for p in oracle_pts], [p[1] for p in oracle_pts], **_ORACLE_STYLE)
        bad = [(x, r.oracle) for x, r in zip(xs, inv_rows)
               if r.verdict == "mismatch" and r.oracle is not None]
        if bad:
            ax.scatter([p[0] for p in bad], [p[1] for p in bad], s=140,
                       facecolors="none", edgecolors="red", label="mismatch")
        ax.set_title(name, fontsize=10)
        ax.set_xticks(list(groups.values()))
        ax.set_xticklabels(list(groups), rotation=60, ha="right", fontsize=7)
        if k == 0:
            ax.legend(fontsize=8)
    for k in range(len(invariants), nrows * ncols):
        axes[k // ncols][k % ncols].axis("off")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
