"""Figure 4: zoom on the low-lying levels with the anti-crossing cascade
marked; inputs are a spectrum CSV (curves) and an anatomy CSV (whose meta
carries the located anti-crossings)."""

from __future__ import annotations

import sys

from .csvio import SchemaError, read_table
from .style import new_figure, save

_PAIR_COLORS = {0: "tab:blue", 1: "tab:red", 2: "tab:green"}


def build(inputs, options=None):
    if len(inputs) < 2:
        raise SchemaError("figure 4 needs a spectrum CSV and an anatomy CSV")
    spectrum = read_table(inputs[0])
    anatomy = read_table(inputs[1])
    spectrum.require("s")
    level_cols = spectrum.require_prefix("e")
    if "anticrossings" not in anatomy.meta:
        raise SchemaError(f"{anatomy.path}: missing meta entry 'anticrossings'")
    fig = new_figure()
    ax = fig.add_subplot(111)
    s = spectrum.col("s")
    for i, name in enumerate(level_cols):
        ax.plot(s, spectrum.col(name), color=_PAIR_COLORS.get(i, "0.6"), linewidth=1.0)
    for s_loc, pair in anatomy.meta["anticrossings"]:
        if s.min() <= s_loc <= s.max():
            ax.axvline(
                s_loc,
                color=_PAIR_COLORS.get(int(pair), "0.4"),
                linestyle="--",
                linewidth=0.8,
                alpha=0.8,
            )
    ax.set_xlim(s.min(), s.max())
    ax.set_xlabel("s")
    ax.set_ylabel("energy")
    ax.set_title(
        f"anti-crossing cascade (n={spectrum.meta.get('n', '?')}, "
        f"alpha={spectrum.meta.get('alpha', '?')})"
    )
    return fig


def main(argv=None) -> int:
    import argparse

    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", action="append", required=True,
                    help="spectrum CSV then anatomy CSV")
    ap.add_argument("--output", required=True)
    args = ap.parse_args(argv)
    save(build(args.input), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
