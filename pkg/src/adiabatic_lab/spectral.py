"""Minimum-gap search, gap scaling in n, and density-of-states analytics.

The gap between the two lowest levels is scanned on a coarse s-grid and
refined by golden section around the coarse minimum; the gap-vs-n data are fit
by both a power law and an exponential in log space, with the lower-residual
model reported.  Density-of-states curves at the path endpoints come in
analytic (continuum) and empirical (exact-level histogram) flavors; the
printed analytic prefactors do not reproduce the 2^n state count, so all
comparisons are shape-wise, each curve normalized to unit mass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigensolver import eigen_lowest, ground_pair
from .model import ModelParams, build_hs, level_energies_s1

__all__ = [
    "GapCurve",
    "GapScalingFit",
    "DosCurve",
    "min_gap",
    "gap_curve",
    "level_curves",
    "gap_scaling",
    "dos_s0_analytic",
    "dos_s1_analytic",
    "dos_s1_sector",
    "dos_empirical",
    "dos_shape_discrepancy",
    "anticrossing_scan",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GapCurve:
    s_grid: np.ndarray
    gaps: np.ndarray


@dataclass(frozen=True)
class GapScalingFit:
    """Least-squares fit of min-gap decay versus n.

    model_kind is 'power' (log gap = intercept - exponent*log n) or
    'exponential' (log gap = intercept - exponent*n), whichever leaves the
    smaller RMS residual in log space; both residuals are kept.
    """

    model_kind: str
    exponent: float
    intercept: float
    residual: float
    residual_power: float
    residual_exponential: float
    power_exponent: float
    exponential_rate: float
    n_list: tuple[int, ...]
    gaps: tuple[float, ...]


@dataclass(frozen=True)
class DosCurve:
    """Density-of-states samples; kind is one of analytic_s0,
    analytic_s1_full, analytic_s1_sector, empirical.  norm is the mass divided
    out when the curve was normalized (1.0 if returned raw)."""

    omega: np.ndarray
    density: np.ndarray
    kind: str
    norm: float = 1.0


def _gap_at(n: int, alpha: float, s: float) -> float:
    t = build_hs(ModelParams(n, alpha, s))
    v = eigen_lowest(t, 2)
    return float(v[1] - v[0])


def _golden_min(f, a: float, b: float, tol: float):
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def min_gap(
    n: int, alpha: float, s_tolerance: float = 1e-10, coarse: int = 200
) -> tuple[float, float]:
    """Global minimum of the gap E1(s) - E0(s) over s in [0, 1].

    Returns (s_star, gap).  A coarse grid locates the basin, golden section
    refines the location to within s_tolerance.
    """
    if s_tolerance <= 0.0:
        raise ValueError("s_tolerance must be positive")
    ss = np.linspace(0.0, 1.0, coarse + 1)
    gaps = np.array([_gap_at(n, alpha, s) for s in ss])
    i = int(np.argmin(gaps))
    a = ss[max(0, i - 1)]
    b = ss[min(coarse, i + 1)]
    s_star, g = _golden_min(lambda s: _gap_at(n, alpha, s), a, b, s_tolerance)
    if gaps[i] < g:
        return float(ss[i]), float(gaps[i])
    return float(s_star), float(g)


def gap_curve(n: int, alpha: float, s_grid) -> GapCurve:
    ss = np.asarray(s_grid, dtype=np.float64)
    gaps = np.array([_gap_at(n, alpha, s) for s in ss])
    return GapCurve(s_grid=ss, gaps=gaps)


def level_curves(n: int, alpha: float, s_grid, levels: int | None = None) -> np.ndarray:
    """Lowest `levels` eigenvalues at each grid point; shape (len(s), levels)."""
    if levels is None:
        levels = n + 1
    ss = np.asarray(s_grid, dtype=np.float64)
    out = np.empty((ss.shape[0], levels))
    for i, s in enumerate(ss):
        out[i] = eigen_lowest(build_hs(ModelParams(n, alpha, s)), levels)
    return out


def gap_scaling(alpha: float, n_list) -> GapScalingFit:
    """Fit min-gap decay over n by power law and exponential; keep the winner."""
    ns = [int(n) for n in n_list]
    if len(ns) < 4 or any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("need at least 4 ascending n values")
    gaps = [min_gap(n, alpha)[1] for n in ns]
    narr = np.array(ns, dtype=np.float64)
    lg = np.log(gaps)
    a_pow = np.vstack([np.ones_like(narr), np.log(narr)]).T
    c_pow, *_ = np.linalg.lstsq(a_pow, lg, rcond=None)
    r_pow = float(np.sqrt(np.mean((a_pow @ c_pow - lg) ** 2)))
    a_exp = np.vstack([np.ones_like(narr), narr]).T
    c_exp, *_ = np.linalg.lstsq(a_exp, lg, rcond=None)
    r_exp = float(np.sqrt(np.mean((a_exp @ c_exp - lg) ** 2)))
    if r_pow <= r_exp:
        kind, expo, intercept, res = "power", -c_pow[1], c_pow[0], r_pow
    else:
        kind, expo, intercept, res = "exponential", -c_exp[1], c_exp[0], r_exp
    return GapScalingFit(
        model_kind=kind,
        exponent=float(expo),
        intercept=float(intercept),
        residual=res,
        residual_power=r_pow,
        residual_exponential=r_exp,
        power_exponent=float(-c_pow[1]),
        exponential_rate=float(-c_exp[1]),
        n_list=tuple(ns),
        gaps=tuple(float(g) for g in gaps),
    )


# ---------------------------------------------------------------------------
# density of states
# ---------------------------------------------------------------------------

def dos_s0_analytic(n: int, omega=None) -> DosCurve:
    """Continuum density at s=0: Gaussian (2n/pi) exp(-2n (w - 1/2)^2)."""
    if omega is None:
        omega = np.linspace(0.0, 1.0, 513)
    omega = np.asarray(omega, dtype=np.float64)
    dens = (2.0 * n / math.pi) * np.exp(-2.0 * n * (omega - 0.5) ** 2)
    return DosCurve(omega=omega, density=dens, kind="analytic_s0")


def dos_s1_sector(n: int, alpha: float, omega=None) -> DosCurve:
    """Continuum maximal-spin-sector density at s=1:
    1 / (alpha (1 - 2w + coth alpha)), valid while that denominator is > 0."""
    if alpha <= 0.0:
        raise ValueError("sector density needs alpha > 0")
    if omega is None:
        omega = np.linspace(0.0, 1.0, 513)
    omega = np.asarray(omega, dtype=np.float64)
    den = alpha * (1.0 - 2.0 * omega + 1.0 / math.tanh(alpha))
    if np.any(den <= 0.0):
        raise ValueError("omega range crosses the density singularity")
    return DosCurve(omega=omega, density=1.0 / den, kind="analytic_s1_sector")


def dos_s1_analytic(n: int, alpha: float, omega=None) -> DosCurve:
    """Continuum full-spectrum density at s=1: the sector Jacobian weighted by
    the Gaussian envelope of the binomial degeneracies.  alpha = 0 recovers the
    Gaussian centered at omega = 1/2."""
    if omega is None:
        omega = np.linspace(0.0, 1.0, 513)
    omega = np.asarray(omega, dtype=np.float64)
    if alpha == 0.0:
        x = 1.0 - omega
        jac = np.ones_like(omega)
    else:
        inner = np.exp(alpha) - 2.0 * omega * math.sinh(alpha)
        if np.any(inner <= 0.0):
            raise ValueError("omega range crosses the density singularity")
        x = (alpha + np.log(inner)) / (2.0 * alpha)
        jac = 1.0 / (alpha * (1.0 - 2.0 * omega + 1.0 / math.tanh(alpha)))
    dens = (2.0 * n / math.pi) * np.exp(-2.0 * n * (x - 0.5) ** 2) * jac
    return DosCurve(omega=omega, density=dens, kind="analytic_s1_full")


def _endpoint_levels(n: int, alpha: float, s: int):
    if s == 1:
        return level_energies_s1(n, alpha)
    # s=0: spectrum of I/2 - S_x/n over the full space; binomial degeneracies
    q = np.arange(n + 1, dtype=np.float64)
    _, deg = level_energies_s1(n, 0.0)
    return q / n, deg


def dos_empirical(
    n: int, alpha: float, s: int, bins: int, normalized: bool = True
) -> DosCurve:
    """Degeneracy-weighted histogram of the exact s=0 or s=1 levels.

    Bin mass sums to 2^n before normalization; with normalized=True the
    density integrates to 1 and norm records the divisor.
    """
    if s not in (0, 1):
        raise ValueError("empirical density is defined at s = 0 or s = 1 only")
    if bins < 2:
        raise ValueError("need at least 2 bins")
    levels, deg = _endpoint_levels(n, alpha, s)
    edges = np.linspace(0.0, 1.0, bins + 1)
    width = edges[1] - edges[0]
    mass, _ = np.histogram(levels, bins=edges, weights=deg)
    density = mass / width
    centers = 0.5 * (edges[:-1] + edges[1:])
    norm = 1.0
    if normalized:
        norm = float(np.sum(mass))
        density = density / norm
    return DosCurve(omega=centers, density=density, kind="empirical", norm=norm)


def bin_averaged_analytic(n: int, alpha: float, s: int, bins: int) -> DosCurve:
    """Analytic endpoint density averaged over the same bins the empirical
    histogram uses, normalized to unit mass; removes binning bias from shape
    comparisons."""
    edges = np.linspace(0.0, 1.0, bins + 1)
    avg = np.empty(bins)
    for i in range(bins):
        xs = np.linspace(edges[i], edges[i + 1], 65)
        if s == 0:
            ys = dos_s0_analytic(n, xs).density
        else:
            ys = dos_s1_analytic(n, alpha, xs).density
        avg[i] = np.trapezoid(ys, xs) / (edges[i + 1] - edges[i])
    width = edges[1] - edges[0]
    norm = float(np.sum(avg) * width)
    centers = 0.5 * (edges[:-1] + edges[1:])
    kind = "analytic_s0" if s == 0 else "analytic_s1_full"
    return DosCurve(omega=centers, density=avg / norm, kind=kind, norm=norm)


def dos_shape_discrepancy(
    n: int, alpha: float, s: int, bins: int, omega_max: float = 1.0
) -> float:
    """Sup-norm mismatch between the unit-mass empirical histogram and the
    bin-averaged unit-mass analytic curve, relative to the analytic peak,
    over omega <= omega_max."""
    emp = dos_empirical(n, alpha, s, bins)
    ana = bin_averaged_analytic(n, alpha, s, bins)
    keep = emp.omega <= omega_max
    e = emp.density[keep]
    a = ana.density[keep]
    we = np.sum(e) * (emp.omega[1] - emp.omega[0])
    wa = np.sum(a) * (emp.omega[1] - emp.omega[0])
    e = e / we
    a = a / wa
    return float(np.max(np.abs(e - a)) / np.max(a))


# ---------------------------------------------------------------------------
# anti-crossing cascade
# ---------------------------------------------------------------------------

def anticrossing_scan(
    n: int,
    alpha: float,
    level_count: int,
    s_grid=None,
    prominence: float = 0.5,
    s_tolerance: float = 1e-9,
) -> list[tuple[float, int]]:
    """Locate the level anti-crossings of adjacent pairs among the lowest
    level_count+1 levels.

    A pair's local gap minimum on the grid counts as an anti-crossing when it
    falls below `prominence` times that pair's median gap; each candidate is
    then refined by golden section.  Returns (s_location, pair_index) sorted
    by s, pair_index being the lower level of the pair.
    """
    if level_count > n:
        raise ValueError("level_count must be at most n")
    if s_grid is None:
        s_grid = np.linspace(0.0, 1.0, 801)
    ss = np.asarray(s_grid, dtype=np.float64)
    curves = level_curves(n, alpha, ss, levels=level_count + 1)
    found = []
    for pair in range(level_count):
        gaps = curves[:, pair + 1] - curves[:, pair]
        median = float(np.median(gaps))
        for i in range(1, len(ss) - 1):
            if gaps[i] <= gaps[i - 1] and gaps[i] <= gaps[i + 1]:
                if gaps[i] < prominence * median:
                    def pair_gap(s, pair=pair):
                        t = build_hs(ModelParams(n, alpha, s))
                        v = eigen_lowest(t, pair + 2)
                        return float(v[pair + 1] - v[pair])

                    s_ref, _ = _golden_min(
                        pair_gap, ss[i - 1], ss[i + 1], s_tolerance
                    )
                    found.append((float(s_ref), pair))
    found.sort()
    return found
