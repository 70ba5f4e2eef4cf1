"""Figures written next to the tabular CLI output.

matplotlib is imported lazily with the Agg backend so the library itself
never needs a display.
"""
from __future__ import annotations

from typing import Sequence


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _save(fig, path: str):
    # fixed metadata keeps repeated runs byte-identical for svg/pdf
    meta = {"Software": None} if str(path).endswith(".png") else {"Creator": None, "Date": None}
    if str(path).endswith(".pdf"):
        meta = {"Creator": None, "Producer": None, "CreationDate": None}
    fig.savefig(path, metadata=meta, bbox_inches="tight")
    _pyplot().close(fig)


def bar_chart(labels: Sequence[str], values: Sequence[int], path: str, *,
              title: str = "", ylabel: str = "multiplicity"):
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * len(labels) + 1.5), 3.2))
    ax.bar(range(len(values)), values, color="#4c72b0")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    _save(fig, path)


def layered_chart(layers: Sequence[Sequence[tuple[str, int]]], path: str, *, title: str = ""):
    """One panel per socle layer, bars are the multiplicities of that layer."""
    plt = _pyplot()
    n = max(1, len(layers))
    width = max(4.0, 0.45 * max((len(x) for x in layers), default=1) + 1.5)
    fig, axes = plt.subplots(n, 1, figsize=(width, 2.2 * n), squeeze=False)
    for d, (ax, layer) in enumerate(zip(axes[:, 0], layers)):
        labels = [lab for lab, _ in layer]
        ax.bar(range(len(layer)), [v for _, v in layer], color="#55a868")
        ax.set_xticks(range(len(layer)))
        ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
        ax.set_ylabel(f"layer {d}")
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
    if title:
        axes[0, 0].set_title(title)
    fig.tight_layout()
    _save(fig, path)


def matrix_chart(row_labels: Sequence[str], col_labels: Sequence[str],
                 values: Sequence[Sequence[float]], path: str, *, title: str = "",
                 cbar_label: str = ""):
    plt = _pyplot()
    size = max(3.0, 0.4 * len(col_labels) + 2.0)
    fig, ax = plt.subplots(figsize=(size, size))
    im = ax.imshow(values, cmap="viridis")
    ax.set_xticks(range(len(col_labels)))
    ax.set_xticklabels(col_labels, rotation=90, fontsize=7)
    ax.set_yticks(range(len(row_labels)))
    ax.set_yticklabels(row_labels, fontsize=7)
    cb = fig.colorbar(im, ax=ax, shrink=0.8)
    if cbar_label:
        cb.set_label(cbar_label)
    if title:
        ax.set_title(title)
    _save(fig, path)
