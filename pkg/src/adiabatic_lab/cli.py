"""Command-line front end: parameter sweeps written as deterministic CSV.

Every CSV has a header row, floats printed with 17 significant digits, and a
final line `# meta: {...}` holding the run parameters as JSON with sorted
keys.  Identical invocations produce byte-identical files regardless of the
worker count (ADIABATIC_LAB_WORKERS or --workers; points are computed in a
pool but assembled in order).

Exit codes: 0 success, 1 invalid arguments, 2 internal numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .model import ModelParams, build_hs
from .parallel import parallel_map, worker_count

GRID_HELP = "grid syntax: 'start..end:count' or explicit comma list 'a,b,c'"


class CliError(ValueError):
    pass


def parse_grid(spec: str) -> np.ndarray:
    """Parse 'start..end:count' or 'a,b,c' into a float array."""
    spec = spec.strip()
    try:
        if ".." in spec:
            span, _, count = spec.partition(":")
            if not count:
                raise ValueError("missing ':count'")
            lo, _, hi = span.partition("..")
            values = np.linspace(float(lo), float(hi), int(count))
        else:
            values = np.array([float(x) for x in spec.split(",") if x.strip() != ""])
    except ValueError as exc:
        raise CliError(f"bad grid {spec!r}: {exc} ({GRID_HELP})") from exc
    if values.size == 0:
        raise CliError(f"empty grid {spec!r}")
    return values


def parse_int_list(spec: str) -> list[int]:
    values = parse_grid(spec)
    out = [int(round(v)) for v in values]
    if any(abs(v - r) > 1e-9 for v, r in zip(values, out)):
        raise CliError(f"expected integers in {spec!r}")
    return out


def _fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return f"{x:.17g}"
    return str(x)


def write_csv(path: str, columns: list[str], rows, meta: dict) -> None:
    meta = dict(meta)
    meta["version"] = __version__
    try:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(columns) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(x) for x in row) + "\n")
            fh.write("# meta: " + json.dumps(meta, sort_keys=True) + "\n")
    except OSError as exc:
        raise CliError(f"cannot write {path!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_spectrum(args) -> int:
    from .spectral import level_curves

    s_grid = parse_grid(args.s_grid)
    levels = args.levels if args.levels is not None else args.n + 1
    if not 1 <= levels <= args.n + 1:
        raise CliError(f"levels must be in 1..{args.n + 1}")

    def point(s):
        return level_curves(args.n, args.alpha, [s], levels)[0]

    curves = parallel_map(point, s_grid, args.workers)
    rows = [[s, *row] for s, row in zip(s_grid, curves)]
    cols = ["s"] + [f"e{i}" for i in range(levels)]
    write_csv(
        args.out,
        cols,
        rows,
        {
            "command": "spectrum",
            "n": args.n,
            "alpha": args.alpha,
            "levels": levels,
            "s_grid": args.s_grid,
        },
    )
    return 0


def cmd_dos(args) -> int:
    from .spectral import (
        bin_averaged_analytic,
        dos_empirical,
        dos_s1_sector,
    )

    emp = dos_empirical(args.n, args.alpha, args.s, args.bins)
    ana = bin_averaged_analytic(args.n, args.alpha, args.s, args.bins)
    if args.s == 1 and args.alpha > 0.0:
        sec = dos_s1_sector(args.n, args.alpha, emp.omega)
        sec_mass = float(np.sum(sec.density) * (emp.omega[1] - emp.omega[0]))
        sector = sec.density / sec_mass
    else:
        sector = np.full_like(emp.omega, math.nan)
    rows = list(zip(emp.omega, emp.density, ana.density, sector))
    write_csv(
        args.out,
        ["omega", "empirical", "analytic_full", "analytic_sector"],
        rows,
        {
            "command": "dos",
            "n": args.n,
            "alpha": args.alpha,
            "s": args.s,
            "bins": args.bins,
            "empirical_total_mass": emp.norm,
            "normalization": "unit mass per curve (shape comparison)",
        },
    )
    return 0


def cmd_phase_diagram(args) -> int:
    from .meanfield import sx_surface

    alphas = parse_grid(args.alpha_grid)
    ss = parse_grid(args.s_grid)

    def row(alpha):
        return sx_surface([alpha], ss)[0]

    surface = parallel_map(row, alphas, args.workers)
    rows = [
        [alpha, s, sx]
        for alpha, line in zip(alphas, surface)
        for s, sx in zip(ss, line)
    ]
    write_csv(
        args.out,
        ["alpha", "s", "sx"],
        rows,
        {
            "command": "phase-diagram",
            "alpha_grid": args.alpha_grid,
            "s_grid": args.s_grid,
        },
    )
    return 0


def cmd_anatomy(args) -> int:
    from .eigensolver import ground_pair
    from .observables import anatomy
    from .spectral import anticrossing_scan

    s_grid = parse_grid(args.s_grid)

    def point(s):
        gp = ground_pair(build_hs(ModelParams(args.n, args.alpha, float(s))))
        a0 = anatomy(gp.psi0)
        a1 = anatomy(gp.psi1)
        return (gp.gap, a0.overlap_x, a0.overlap_z, a1.overlap_x, a1.overlap_z)

    data = parallel_map(point, s_grid, args.workers)
    rows = [[s, *vals] for s, vals in zip(s_grid, data)]
    crossings = anticrossing_scan(args.n, args.alpha, args.pairs, s_grid)
    ground_locs = [s for s, pair in crossings if pair == 0]
    s_c = ground_locs[0] if ground_locs else None
    meta = {
        "command": "anatomy",
        "n": args.n,
        "alpha": args.alpha,
        "s_grid": args.s_grid,
        "pairs": args.pairs,
        "anticrossings": [[s, pair] for s, pair in crossings],
        "s_c": s_c,
    }
    write_csv(
        args.out,
        ["s", "gap01", "overlap_x_0", "overlap_z_0", "overlap_x_1", "overlap_z_1"],
        rows,
        meta,
    )
    if args.dicke_out:
        if s_c is None:
            raise CliError("no ground-state anti-crossing found; cannot place the Dicke cut")
        delta = float(s_grid[1] - s_grid[0]) if len(s_grid) > 1 else 1e-3
        after = ground_pair(build_hs(ModelParams(args.n, args.alpha, min(1.0, s_c + delta))))
        before = ground_pair(build_hs(ModelParams(args.n, args.alpha, max(0.0, s_c - delta))))
        w_after = anatomy(after.psi0).dicke_weights
        w_before = anatomy(before.psi1).dicke_weights
        k = np.arange(args.n + 1)
        rows2 = list(zip(k, k - args.n / 2.0, w_after, w_before))
        write_csv(
            args.dicke_out,
            ["k", "m", "weight_ground_after", "weight_excited_before"],
            rows2,
            {
                "command": "anatomy.dicke",
                "n": args.n,
                "alpha": args.alpha,
                "s_c": s_c,
                "delta": delta,
            },
        )
    return 0


def cmd_concurrence(args) -> int:
    from .eigensolver import ground_pair
    from .observables import rescaled_concurrence

    alphas = parse_grid(args.alpha_grid)
    ss = parse_grid(args.s_grid)

    def cr(n, alpha, s):
        gp = ground_pair(build_hs(ModelParams(n, alpha, float(s))))
        return rescaled_concurrence(gp.psi0)

    points = [(alpha, s) for alpha in alphas for s in ss]

    def point(p):
        alpha, s = p
        row = [cr(args.n, alpha, s)]
        if args.extrapolate:
            ns = np.array([args.n // 4, args.n // 2, args.n], dtype=np.float64)
            vals = np.array([cr(int(m), alpha, s) for m in ns])
            a = np.vstack([np.ones_like(ns), 1.0 / ns]).T
            coef, *_ = np.linalg.lstsq(a, vals, rcond=None)
            row.append(float(coef[0]))
        return row

    data = parallel_map(point, points, args.workers)
    rows = [[alpha, s, *vals] for (alpha, s), vals in zip(points, data)]
    cols = ["alpha", "s", "cr"] + (["cr_extrapolated"] if args.extrapolate else [])
    write_csv(
        args.out,
        cols,
        rows,
        {
            "command": "concurrence",
            "n": args.n,
            "alpha_grid": args.alpha_grid,
            "s_grid": args.s_grid,
            "extrapolate": bool(args.extrapolate),
        },
    )
    return 0


def cmd_gap_scaling(args) -> int:
    from .meanfield import endpoint_s_candidates
    from .spectral import gap_scaling, min_gap

    ns = parse_int_list(args.n_list)

    def point(n):
        return min_gap(n, args.alpha, s_tolerance=args.s_tolerance)

    located = parallel_map(point, ns, args.workers)
    fit = gap_scaling(args.alpha, ns)
    rows = [[n, s, g] for n, (s, g) in zip(ns, located)]
    lo, hi = endpoint_s_candidates()
    write_csv(
        args.out,
        ["n", "s_star", "gap"],
        rows,
        {
            "command": "gap-scaling",
            "alpha": args.alpha,
            "n_list": args.n_list,
            "s_tolerance": args.s_tolerance,
            "fit": {
                "preferred": fit.model_kind,
                "power": {
                    "nu": fit.power_exponent,
                    "residual": fit.residual_power,
                },
                "exponential": {
                    "rate": fit.exponential_rate,
                    "residual": fit.residual_exponential,
                },
                "intercept": fit.intercept,
            },
            "endpoint_s_closed_form_candidates": [lo, hi],
        },
    )
    return 0


def cmd_dynamics(args) -> int:
    from .dynamics import evolve, required_time_scan

    if args.required_time:
        if args.n_list is None:
            raise CliError("--required-time needs --n-list")
        ns = parse_int_list(args.n_list)
        scan = required_time_scan(ns, args.alpha, args.target)
        rows = [[r.n, r.t_star, r.min_gap, r.inv_gap_sq] for r in scan]
        write_csv(
            args.out,
            ["n", "t_star", "min_gap", "inv_gap_sq"],
            rows,
            {
                "command": "dynamics",
                "mode": "required-time",
                "alpha": args.alpha,
                "n_list": args.n_list,
                "target": args.target,
            },
        )
        return 0
    if args.n is None or args.t_grid is None:
        raise CliError("fidelity mode needs --n and --T-grid")
    ts = parse_grid(args.t_grid)

    def point(T):
        r = evolve(args.n, args.alpha, float(T), args.steps)
        return (r.fidelity, r.norm_drift, r.steps)

    data = parallel_map(point, ts, args.workers)
    rows = [[T, *vals] for T, vals in zip(ts, data)]
    write_csv(
        args.out,
        ["T", "fidelity", "norm_drift", "steps"],
        rows,
        {
            "command": "dynamics",
            "mode": "fidelity",
            "n": args.n,
            "alpha": args.alpha,
            "T_grid": args.t_grid,
            "steps": args.steps,
        },
    )
    return 0


def cmd_oracle_check(args) -> int:
    from .oracle import run_equivalence_suite

    results = run_equivalence_suite(n_max=args.n_max)
    failed = 0
    for name, ok, worst in results:
        print(f"{'PASS' if ok else 'FAIL'} {name} (worst {worst:.3e})")
        failed += 0 if ok else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 2


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="adiabatic-lab",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out=True):
        sp.add_argument("--workers", type=int, default=None,
                        help="worker pool size (default: ADIABATIC_LAB_WORKERS or 1)")
        if out:
            sp.add_argument("--out", required=True, help="output CSV path")

    sp = sub.add_parser(
        "spectrum",
        help="level curves vs s",
        description="Columns: s, e0..e{levels-1} (lowest eigenvalues at each s).",
    )
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--s-grid", default="0..1:201", help=GRID_HELP)
    sp.add_argument("--levels", type=int, default=None, help="default: all n+1")
    common(sp)
    sp.set_defaults(fn=cmd_spectrum)

    sp = sub.add_parser(
        "dos",
        help="density of states at s=0 or s=1",
        description=(
            "Columns: omega, empirical, analytic_full, analytic_sector.  All "
            "curves normalized to unit mass; analytic_sector is nan at s=0 or "
            "alpha=0.  The analytic_full column is bin-averaged over the "
            "histogram bins."
        ),
    )
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--s", type=int, choices=(0, 1), default=1)
    sp.add_argument("--bins", type=int, default=40)
    common(sp)
    sp.set_defaults(fn=cmd_dos)

    sp = sub.add_parser(
        "phase-diagram",
        help="mean-field <s_x> surface",
        description="Columns: alpha, s, sx (long format, alpha-major order).",
    )
    sp.add_argument("--alpha-grid", default="0..6:121", help=GRID_HELP)
    sp.add_argument("--s-grid", default="0..1:121", help=GRID_HELP)
    common(sp)
    sp.set_defaults(fn=cmd_phase_diagram)

    sp = sub.add_parser(
        "anatomy",
        help="overlaps of the two lowest states and anti-crossing cascade",
        description=(
            "Columns: s, gap01, overlap_x_0, overlap_z_0, overlap_x_1, "
            "overlap_z_1.  Meta records anti-crossing locations as [s, pair] "
            "and s_c (the pair-0 location).  --dicke-out writes columns k, m, "
            "weight_ground_after, weight_excited_before at s_c +/- one grid "
            "step."
        ),
    )
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--s-grid", default="0..1:801", help=GRID_HELP)
    sp.add_argument("--pairs", type=int, default=3, help="adjacent level pairs to scan")
    sp.add_argument("--dicke-out", default=None, help="optional Dicke-weights CSV")
    common(sp)
    sp.set_defaults(fn=cmd_anatomy)

    sp = sub.add_parser(
        "concurrence",
        help="rescaled concurrence of the ground state",
        description=(
            "Columns: alpha, s, cr (plus cr_extrapolated with --extrapolate: "
            "1/n fit over {n/4, n/2, n})."
        ),
    )
    sp.add_argument("--n", type=int, default=2000)
    sp.add_argument("--alpha-grid", default="0..6:61", help=GRID_HELP)
    sp.add_argument("--s-grid", default="0..1:121", help=GRID_HELP)
    sp.add_argument("--extrapolate", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_concurrence)

    sp = sub.add_parser(
        "gap-scaling",
        help="minimum gap vs n with power/exponential fits",
        description=(
            "Columns: n, s_star, gap.  The footer meta carries both fits and "
            "the preferred model."
        ),
    )
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--n-list", required=True, help=GRID_HELP + " (integers)")
    sp.add_argument("--s-tolerance", type=float, default=1e-10)
    common(sp)
    sp.set_defaults(fn=cmd_gap_scaling)

    sp = sub.add_parser(
        "dynamics",
        help="fidelity vs T, or required time vs n",
        description=(
            "Fidelity mode columns: T, fidelity, norm_drift, steps.  "
            "--required-time mode columns: n, t_star, min_gap, inv_gap_sq."
        ),
    )
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--T-grid", dest="t_grid", default=None, help=GRID_HELP)
    sp.add_argument("--steps", type=int, default=None,
                    help="fixed step count (default: auto-converged)")
    sp.add_argument("--required-time", action="store_true")
    sp.add_argument("--n-list", default=None, help=GRID_HELP + " (integers)")
    sp.add_argument("--target", type=float, default=0.9)
    common(sp)
    sp.set_defaults(fn=cmd_dynamics)

    sp = sub.add_parser(
        "oracle-check",
        help="run the dense-oracle equivalence suite",
        description="Prints one PASS/FAIL line per check; exit 0 iff all pass.",
    )
    sp.add_argument("--n-max", type=int, default=8)
    common(sp, out=False)
    sp.set_defaults(fn=cmd_oracle_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        worker_count(args.workers)  # validate early
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # numerical failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
