"""PNG figures for CLI reports (matplotlib, non-interactive backend)."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# no timestamp or version stamp, so repeated runs write identical files
_PNG_META = {"Software": None}


def _save(fig, out_dir: str, name: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path


def plot_dims(hh_dims: list[int], cochain_dims: list[int], out_dir: str, title: str = "") -> str:
    """Grouped bars of dim HH^n next to dim of the cochain space in each degree."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    xs = range(len(hh_dims))
    ax.bar([x - 0.2 for x in xs], cochain_dims, width=0.4, label="cochains", color="#9bb7d4")
    ax.bar([x + 0.2 for x in xs], hh_dims, width=0.4, label="HH", color="#2c5d8f")
    ax.set_xticks(list(xs))
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.set_title(title or "Hochschild cohomology")
    ax.legend()
    return _save(fig, out_dir, "dims.png")


def plot_table(table, out_dir: str, title: str = "") -> str:
    """Heatmap of which class pairs have a nonzero product."""
    labels = table.labels
    index = {lab: i for i, lab in enumerate(labels)}
    grid = [[0] * len(labels) for _ in labels]
    for (a, b), cls in table.entries.items():
        grid[index[a]][index[b]] = 0 if cls.is_zero else 1
    fig, ax = plt.subplots(figsize=(1 + 0.5 * max(len(labels), 2), 1 + 0.5 * max(len(labels), 2)))
    ax.imshow(grid if labels else [[0]], cmap="Greys", vmin=0, vmax=1)
    names = [f"{n}.{j}" for n, j in labels]
    ax.set_xticks(range(len(names)), names, rotation=90)
    ax.set_yticks(range(len(names)), names)
    ax.set_xlabel("right class")
    ax.set_ylabel("left class")
    kind = table.kind if table.variant is None else f"{table.kind} ({table.variant})"
    ax.set_title(title or f"nonzero {kind} products")
    name = "cup.png" if table.variant is None else f"bracket-{table.variant}.png"
    return _save(fig, out_dir, name)


def plot_fuzz(report, out_dir: str) -> str:
    """Verdict counts of a fuzz run."""
    tally = report.tally
    keys = ["pass", "fail", "report-only", "findings"]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(keys, [tally[k] for k in keys], color=["#3a7d44", "#b23a48", "#8d8d8d", "#d39b2a"])
    ax.set_ylabel("presentations")
    ax.set_title(f"{report.property}: {report.count} runs")
    return _save(fig, out_dir, f"fuzz-{report.property}.png")
