"""Figure 3: symmetric-sector level curves vs s, one panel per input file."""

from __future__ import annotations

import math
import sys

from .csvio import read_table
from .style import new_figure, save


def build(inputs, options=None):
    cols = min(3, len(inputs))
    rows = math.ceil(len(inputs) / cols)
    fig = new_figure(width_scale=cols / 2.0, height_scale=rows / 1.6)
    for i, path in enumerate(inputs):
        table = read_table(path)
        table.require("s")
        level_cols = table.require_prefix("e")
        ax = fig.add_subplot(rows, cols, i + 1)
        s = table.col("s")
        for name in level_cols:
            ax.plot(s, table.col(name), linewidth=0.8)
        ax.set_title(f"n={table.meta.get('n', '?')}, alpha={table.meta.get('alpha', '?')}")
        ax.set_xlabel("s")
        ax.set_ylabel("energy")
    fig.tight_layout()
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
