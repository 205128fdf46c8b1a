"""Figure rendering front end.

`render` draws one figure from explicit inputs; `render-all` walks an input
directory laid out with the conventional file names below and renders every
figure it finds inputs for.

    fig 1  dos_*.csv                (one file per alpha)
    fig 2  phase_diagram.csv
    fig 3  spectrum_panel_*.csv     (one file per panel)
    fig 4  spectrum_zoom.csv + anatomy.csv
    fig 5  anatomy.csv
    fig 6  dicke.csv
    fig 7  concurrence.csv
    fig 8  gap_scaling_*.csv        (one file per alpha)

Outputs are deterministic PNG + SVG pairs named fig<N>.<ext>.  Exit codes:
0 success, 1 bad arguments or schema mismatch (the offending column is
named), 2 unexpected internal failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import (
    fig1_density_of_states,
    fig2_phase_diagram,
    fig3_spectrum,
    fig4_anticrossings,
    fig5_overlaps,
    fig6_dicke_projections,
    fig7_concurrence,
    fig8_gap_scaling,
)
from .csvio import SchemaError
from .style import save

BUILDERS = {
    1: fig1_density_of_states.build,
    2: fig2_phase_diagram.build,
    3: fig3_spectrum.build,
    4: fig4_anticrossings.build,
    5: fig5_overlaps.build,
    6: fig6_dicke_projections.build,
    7: fig7_concurrence.build,
    8: fig8_gap_scaling.build,
}


@dataclass(frozen=True)
class FigureSpec:
    figure: int
    inputs: list[str]
    output: str  # path base, extensions appended
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.figure not in BUILDERS:
            raise ValueError(f"figure id must be 1..8, got {self.figure}")
        missing = [p for p in self.inputs if not Path(p).exists()]
        if missing:
            raise ValueError(f"missing input file(s): {missing}")


def render(spec: FigureSpec) -> list[str]:
    """Build and write one figure; returns the paths written."""
    fig = BUILDERS[spec.figure](spec.inputs, spec.options)
    return save(fig, spec.output)


def _conventional_inputs(input_dir: Path) -> dict[int, list[str]]:
    found: dict[int, list[str]] = {}

    def glob(pattern):
        return sorted(str(p) for p in input_dir.glob(pattern))

    if glob("dos_*.csv"):
        found[1] = glob("dos_*.csv")
    if glob("phase_diagram.csv"):
        found[2] = glob("phase_diagram.csv")
    if glob("spectrum_panel_*.csv"):
        found[3] = glob("spectrum_panel_*.csv")
    if glob("spectrum_zoom.csv") and glob("anatomy.csv"):
        found[4] = glob("spectrum_zoom.csv") + glob("anatomy.csv")
    if glob("anatomy.csv"):
        found[5] = glob("anatomy.csv")
    if glob("dicke.csv"):
        found[6] = glob("dicke.csv")
    if glob("concurrence.csv"):
        found[7] = glob("concurrence.csv")
    if glob("gap_scaling_*.csv"):
        found[8] = glob("gap_scaling_*.csv")
    return found


def cmd_render(args) -> int:
    options = {}
    if args.logx is not None:
        options["logx"] = args.logx
    if args.logy is not None:
        options["logy"] = args.logy
    spec = FigureSpec(
        figure=args.figure, inputs=args.input, output=args.output, options=options
    )
    for path in render(spec):
        print(path)
    return 0


def cmd_render_all(args) -> int:
    input_dir = Path(args.input_dir)
    output_dir = Path(args.output_dir)
    if not input_dir.is_dir():
        raise ValueError(f"not a directory: {input_dir}")
    output_dir.mkdir(parents=True, exist_ok=True)
    inputs = _conventional_inputs(input_dir)
    if not inputs:
        raise ValueError(f"no conventional inputs found under {input_dir}")
    missing = sorted(set(range(1, 9)) - set(inputs))
    if args.strict and missing:
        raise ValueError(f"missing inputs for figures {missing}")
    for figure, paths in sorted(inputs.items()):
        spec = FigureSpec(
            figure=figure, inputs=paths, output=str(output_dir / f"fig{figure}")
        )
        for path in render(spec):
            print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="adiabatic-figures",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("render", help="render one figure")
    sp.add_argument("--figure", type=int, required=True, help="figure id 1..8")
    sp.add_argument("--input", action="append", required=True)
    sp.add_argument("--output", required=True, help="output path base (no extension)")
    sp.add_argument("--logx", action=argparse.BooleanOptionalAction, default=None)
    sp.add_argument("--logy", action=argparse.BooleanOptionalAction, default=None)
    sp.set_defaults(fn=cmd_render)

    sp = sub.add_parser("render-all", help="render every figure found in a directory")
    sp.add_argument("--input-dir", required=True)
    sp.add_argument("--output-dir", required=True)
    sp.add_argument("--strict", action="store_true",
                    help="fail if any of the eight figures lacks inputs")
    sp.set_defaults(fn=cmd_render_all)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit:
        raise
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
