"""Figure 6: Dicke-basis weight profiles of the ground state just after and
the first excited state just before the anti-crossing, on a log scale."""

from __future__ import annotations

import sys

import numpy as np

from .csvio import read_table
from .style import new_figure, save

_FLOOR = 1e-300  # keeps exact zeros off the log axis without masking shape


def build(inputs, options=None):
    options = options or {}
    table = read_table(inputs[0])
    table.require("k", "weight_ground_after", "weight_excited_before")
    fig = new_figure()
    ax = fig.add_subplot(111)
    k = table.col("k")
    ax.plot(
        k,
        np.maximum(table.col("weight_ground_after"), _FLOOR),
        "o-",
        markersize=3,
        label="ground, just after",
    )
    ax.plot(
        k,
        np.maximum(table.col("weight_excited_before"), _FLOOR),
        "s-",
        markersize=3,
        label="first excited, just before",
    )
    if options.get("logy", True):
        ax.set_yscale("log")
        top = max(
            table.col("weight_ground_after").max(),
            table.col("weight_excited_before").max(),
        )
        ax.set_ylim(1e-40, max(1.0, top * 2.0))
    ax.set_xlabel("Dicke index k")
    ax.set_ylabel("|projection|^2")
    ax.set_title(
        f"Dicke weights around s_c={table.meta.get('s_c', '?'):.4f}"
        if isinstance(table.meta.get("s_c"), float)
        else "Dicke weights around the anti-crossing"
    )
    ax.legend()
    return fig


def main(argv=None) -> int:
    import argparse

    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", action="append", required=True)
    ap.add_argument("--output", required=True)
    ap.add_argument("--no-logy", action="store_true")
    args = ap.parse_args(argv)
    save(build(args.input, {"logy": not args.no_logy}), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
