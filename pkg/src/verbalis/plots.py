"""Figures written next to CLI reports.  Everything renders off-screen."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .group import FiniteGroup, popcount  # noqa: E402


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def lattice_figure(G: FiniteGroup, masks: Sequence[int], normal: set[int], path) -> Path:
    """Hasse diagram; height is log of the subgroup order, normal subgroups filled."""
    by_order: dict[int, list[int]] = {}
    for m in masks:
        by_order.setdefault(popcount(m), []).append(m)
    pos = {}
    for order, row in by_order.items():
        y = math.log(order) if order > 1 else 0.0
        for i, m in enumerate(row):
            pos[m] = ((i + 1) / (len(row) + 1), y)
    fig, ax = plt.subplots(figsize=(6, 5))
    for m in masks:
        above = [k for k in masks if k != m and m & ~k == 0]
        covers = [k for k in above if not any(j != k and m & ~j == 0 and j & ~k == 0 and j != m for j in above)]
        for k in covers:
            (x0, y0), (x1, y1) = pos[m], pos[k]
            ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
    for m in masks:
        x, y = pos[m]
        filled = m in normal
        ax.scatter([x], [y], s=60, zorder=2, edgecolors="k",
                   facecolors="tab:blue" if filled else "white")
    orders = sorted(by_order)
    ax.set_yticks([math.log(o) if o > 1 else 0.0 for o in orders])
    ax.set_yticklabels([str(o) for o in orders])
    ax.set_xticks([])
    ax.set_ylabel("subgroup order")
    ax.set_title(f"Subgroups of {G.label or 'G'} (filled: normal)")
    return _save(fig, path)


def layers_figure(layers: Sequence[int], title: str, path) -> Path:
    """Bar chart of how many new elements each extra factor reaches."""
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(range(len(layers)), layers, color="tab:green")
    ax.set_xlabel("number of values (or inverses) multiplied")
    ax.set_ylabel("new elements")
    ax.set_xticks(range(len(layers)))
    ax.set_title(title)
    return _save(fig, path)


def class_counts_figure(counts: Sequence[Mapping[int, int]], title: str, path) -> Path:
    """Quotient classes per order (one line per order) against tower depth."""
    orders = sorted({o for c in counts for o in c})
    fig, ax = plt.subplots(figsize=(5, 3.5))
    depths = range(1, len(counts) + 1)
    for o in orders:
        ax.plot(depths, [c.get(o, 0) for c in counts], marker="o", label=f"order {o}")
    ax.set_xlabel("tower depth")
    ax.set_ylabel("quotient classes")
    ax.set_xticks(list(depths))
    ax.legend(fontsize=7, ncol=2)
    ax.set_title(title)
    return _save(fig, path)


def corpus_figure(rows: Sequence[Mapping], path) -> Path:
    """Two panels over the corpus: subgroup counts and commutator widths."""
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.8))
    orders = [r["order"] for r in rows]
    left.scatter(orders, [r["subgroups"] for r in rows], s=14, label="all")
    left.scatter(orders, [r["normal_subgroups"] for r in rows], s=14, marker="x", label="normal")
    left.set_xlabel("group order")
    left.set_ylabel("count")
    left.set_yscale("log")
    left.legend(fontsize=8)
    left.set_title("Subgroups")
    widths = [r["commutator_width"] for r in rows]
    top = max(widths) if widths else 0
    right.hist(widths, bins=[b - 0.5 for b in range(top + 2)], color="tab:orange", rwidth=0.8)
    right.set_xlabel("commutator width")
    right.set_ylabel("groups")
    right.set_title("Commutator width")
    return _save(fig, path)

