"""Figure 7: rescaled concurrence of the ground state over the alpha-s plane;
discontinuous across the first-order line, growing with alpha."""

from __future__ import annotations

import sys

from ._heatmap import draw_heatmap, surface_from_long
from .csvio import read_table
from .style import new_figure, save


def build(inputs, options=None):
    table = read_table(inputs[0])
    alphas, ss, grid = surface_from_long(table, "cr")
    fig = new_figure()
    ax = fig.add_subplot(111)
    draw_heatmap(ax, alphas, ss, grid, "rescaled concurrence")
    ax.set_title(f"ground-state concurrence (n={table.meta.get('n', '?')})")
    return fig


def main(argv=None) -> int:
    import argparse

    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", action="append", required=True)
    ap.add_argument("--output", required=True)
    args = ap.parse_args(argv)
    save(build(args.input), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
