"""Figures for the ``--plot`` flag of ``akb blocks`` and ``akb abacus``.

Only the Agg backend is used, so nothing here needs a display.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .abacus import Abacus  # noqa: E402
from .blocks import BlockSummary  # noqa: E402

CORE_COLOR = "#2b6cb0"
OTHER_COLOR = "#c05621"


def plot_blocks(blocks: Sequence[BlockSummary], path: str | Path, title: str | None = None) -> Path:
    """Stem chart of component dimension per block; core blocks in blue."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(blocks) + 2), 3.5))
    xs = list(range(len(blocks)))
    dims = [B.dim for B in blocks]
    colors = [CORE_COLOR if B.is_core_block else OTHER_COLOR for B in blocks]
    # stems rather than bars: core blocks have dim 0 and would be invisible
    ax.vlines(xs, 0, dims, colors=colors, linewidth=1.5)
    for marker, core in (("o", True), ("s", False)):
        pts = [(x, d) for x, d, B in zip(xs, dims, blocks) if B.is_core_block == core]
        if pts:
            ax.scatter(*zip(*pts), marker=marker, s=40, zorder=3,
                       color=CORE_COLOR if core else OTHER_COLOR,
                       label="core block" if core else "k > 0")
    for x, B in zip(xs, blocks):
        ax.annotate(str(len(B.members)), (x, B.dim), xytext=(0, 6), textcoords="offset points",
                    ha="center", fontsize=7)
    ax.set_xticks(xs)
    ax.set_xticklabels([",".join(map(str, B.key)) for B in blocks], rotation=45, ha="right", fontsize=8)
    ax.set_xlim(-0.6, len(blocks) - 0.4)
    ax.set_ylim(-0.5, max(dims, default=0) + 1.5)
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("residue vector d (labels: member count)")
    ax.set_ylabel("dim = 2 omega")
    ax.legend(fontsize=8, frameon=False)
    if title:
        ax.set_title(title, fontsize=10)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_abacus(A: Abacus, lo: int, hi: int, path: str | Path, title: str | None = None) -> Path:
    """Bead diagram: filled circles are beads, hollow ones holes, row r on top."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    path = Path(path)
    width = hi - lo + 1
    fig, ax = plt.subplots(figsize=(max(3.0, 0.35 * width + 1), 0.5 * A.r + 1))
    for j in range(1, A.r + 1):
        beads = [k for k in range(lo, hi + 1) if A.bead(k, j)]
        holes = [k for k in range(lo, hi + 1) if not A.bead(k, j)]
        ax.scatter(beads, [j] * len(beads), s=60, color="black", zorder=3)
        ax.scatter(holes, [j] * len(holes), s=60, facecolors="white", edgecolors="gray", zorder=3)
        ax.hlines(j, lo - 0.5, hi + 0.5, color="lightgray", linewidth=0.8, zorder=1)
    if lo <= 0 <= hi + 1:
        ax.axvline(-0.5, color="red", linewidth=0.8)
    ax.set_yticks(range(1, A.r + 1))
    ax.set_yticklabels([f"row {j} (s={A.rows[j - 1][0]})" for j in range(1, A.r + 1)], fontsize=8)
    ax.set_xlim(lo - 1, hi + 1)
    ax.set_ylim(0.4, A.r + 0.6)
    ax.set_xlabel("position")
    if title:
        ax.set_title(title, fontsize=10)
    for side in ("top", "right", "left"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
