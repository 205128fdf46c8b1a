"""Shared long-format (alpha, s, value) -> alpha-s heatmap plotting."""

from __future__ import annotations

import numpy as np

from .csvio import SweepTable


def surface_from_long(table: SweepTable, value_col: str):
    """Reshape alpha-major long format into (alphas, ss, grid)."""
    table.require("alpha", "s", value_col)
    alpha = table.col("alpha")
    s = table.col("s")
    values = table.col(value_col)
    alphas = np.unique(alpha)
    ss = np.unique(s)
    if alphas.size * ss.size != values.size:
        raise ValueError(
            f"{table.path}: rows do not form a full alpha x s grid "
            f"({alphas.size} x {ss.size} != {values.size})"
        )
    grid = values.reshape(alphas.size, ss.size)
    return alphas, ss, grid


def draw_heatmap(ax, alphas, ss, grid, label: str):
    mesh = ax.pcolormesh(alphas, ss, grid.T, shading="nearest", rasterized=True)
    ax.set_xlabel("alpha")
    ax.set_ylabel("s")
    cbar = ax.figure.colorbar(mesh, ax=ax)
    cbar.set_label(label)
    return mesh
