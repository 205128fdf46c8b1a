"""Deterministic rendering defaults: fixed geometry, fonts, and colormap, no
timestamps in the output metadata, and a pinned SVG hash salt so identical
inputs produce identical bytes."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

FIGSIZE = (6.4, 4.8)
DPI = 150
CMAP = "viridis"

_RC = {
    "figure.figsize": FIGSIZE,
    "figure.dpi": DPI,
    "savefig.dpi": DPI,
    "font.family": "DejaVu Sans",
    "font.size": 10.0,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "adiabatic-figures",
    "image.cmap": CMAP,
}


def new_figure(width_scale: float = 1.0, height_scale: float = 1.0):
    plt.rcdefaults()
    matplotlib.rcParams.update(_RC)
    return plt.figure(
        figsize=(FIGSIZE[0] * width_scale, FIGSIZE[1] * height_scale)
    )


def save(fig, output_base: str) -> list[str]:
    """Write PNG and SVG next to each other; returns the paths written."""
    paths = []
    for ext in ("png", "svg"):
        path = f"{output_base}.{ext}"
        fig.savefig(path, metadata={"Date": None} if ext == "svg" else None)
        paths.append(path)
    plt.close(fig)
    return paths
