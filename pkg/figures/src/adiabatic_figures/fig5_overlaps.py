"""Figure 5: squared overlaps of the two lowest states with the x- and
z-polarized product states, showing the exchange at the transition."""

from __future__ import annotations

import sys

from .csvio import read_table
from .style import new_figure, save


def build(inputs, options=None):
    table = read_table(inputs[0])
    table.require("s", "overlap_x_0", "overlap_z_0", "overlap_x_1", "overlap_z_1")
    s = table.col("s")
    fig = new_figure(height_scale=1.6)
    panels = (
        ("(a) ground state", (("overlap_x_0", "x-polarized"), ("overlap_z_0", "z-polarized"))),
        ("(b) first excited", (("overlap_x_1", "x-polarized"), ("overlap_z_1", "z-polarized"))),
        ("(c) combined", (
            ("overlap_x_0", "gs / x"), ("overlap_z_0", "gs / z"),
            ("overlap_x_1", "e1 / x"), ("overlap_z_1", "e1 / z"),
        )),
    )
    s_c = table.meta.get("s_c")
    for i, (title, series) in enumerate(panels):
        ax = fig.add_subplot(3, 1, i + 1)
        for col, label in series:
            ax.plot(s, table.col(col), label=label, linewidth=1.0)
        if s_c is not None:
            ax.axvline(s_c, color="0.4", linestyle=":", linewidth=0.8)
        ax.set_ylabel("|overlap|^2")
        ax.set_title(title, fontsize=9)
        ax.legend(fontsize=7, ncol=2)
    ax.set_xlabel("s")
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
