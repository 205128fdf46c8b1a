"""Figure 1: endpoint density of states, empirical histogram vs analytic
curve, one pair of series per input file (one file per interaction value)."""

from __future__ import annotations

import sys

from .csvio import read_table
from .style import new_figure, save


def build(inputs, options=None):
    fig = new_figure()
    ax = fig.add_subplot(111)
    for path in inputs:
        table = read_table(path)
        table.require("omega", "empirical", "analytic_full")
        alpha = table.meta.get("alpha", "?")
        (line,) = ax.plot(
            table.col("omega"), table.col("analytic_full"), label=f"alpha={alpha}"
        )
        ax.plot(
            table.col("omega"),
            table.col("empirical"),
            "o",
            color=line.get_color(),
            markersize=3,
            alpha=0.7,
        )
    ax.set_xlabel("energy")
    ax.set_ylabel("density of states (unit mass)")
    ax.set_title("endpoint density of states: analytic (line) vs exact levels (dots)")
    ax.legend()
    return fig


def main(argv=None) -> int:
    import argparse

    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", action="append", required=True)
    ap.add_argument("--output", required=True, help="output path base (no extension)")
    args = ap.parse_args(argv)
    save(build(args.input), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
