"""Product-ansatz energy surface, its minimizers, and the phase diagram.

The ansatz is the uniform Bloch product state with polar angle theta and
azimuth phi.  Its energy per qubit in the infinite-size limit is

    E(theta, phi) = (1-s)(1 - sin(theta) cos(phi))/2 + s * P(theta, alpha)

with P the problem-Hamiltonian term; phi enters only through -cos(phi) with a
nonpositive coefficient, so production minimization fixes phi = 0 (guarded by
a 2-D check in the tests).  For alpha > alpha_c = 3*sqrt(3)/2 the global
minimizer theta*(s) jumps at some s_c(alpha): a first-order line that
terminates in a single second-order point at alpha_c, where the minimum turns
quartic instead of splitting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

__all__ = [
    "ALPHA_C",
    "MeanFieldSolution",
    "TransitionPoint",
    "mf_energy",
    "mf_energy_finite",
    "mf_energy_curvature",
    "mf_minimize",
    "sx_surface",
    "transition_line",
    "critical_point",
    "endpoint_s_candidates",
]

ALPHA_C = 3.0 * math.sqrt(3.0) / 2.0

# spec-fixed classification tolerances
_DEGENERACY_ENERGY_TOL = 1e-10
_THETA_SEPARATION = 1e-3
_SX_JUMP_TOL = 1e-4
_CURVATURE_TOL = 1e-4


def _hp_term(theta, alpha: float):
    """(e^alpha - e^{alpha cos theta}) / (2 sinh alpha), overflow-free."""
    theta = np.asarray(theta, dtype=np.float64)
    if alpha < 1e-8:
        return (1.0 - np.cos(theta)) / 2.0
    if math.isinf(alpha):
        return np.where(theta == 0.0, 0.0, np.ones_like(theta))
    return np.expm1(alpha * (np.cos(theta) - 1.0)) / np.expm1(-2.0 * alpha)


def mf_energy(theta, phi, s: float, alpha: float):
    """Infinite-n energy of the product ansatz; vectorized over theta/phi."""
    theta = np.asarray(theta, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    out = (1.0 - s) * (1.0 - np.sin(theta) * np.cos(phi)) / 2.0 + s * _hp_term(
        theta, alpha
    )
    return out if out.ndim else float(out)


def mf_energy_finite(theta, phi, s: float, alpha: float, n: int):
    """Exact n-qubit product-state energy; converges to mf_energy as n grows.

    The problem term is (1 - B^n) / (1 - e^{-2 alpha}) with
    B = cos^2(theta/2) + sin^2(theta/2) e^{-2 alpha / n}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    theta = np.asarray(theta, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    field = (1.0 - s) * (1.0 - np.sin(theta) * np.cos(phi)) / 2.0
    if alpha < 1e-8:
        prob = (1.0 - np.cos(theta)) / 2.0
    elif math.isinf(alpha):
        prob = 1.0 - np.cos(theta / 2.0) ** (2 * n)
    else:
        b = np.cos(theta / 2.0) ** 2 + np.sin(theta / 2.0) ** 2 * math.exp(
            -2.0 * alpha / n
        )
        prob = -np.expm1(n * np.log(b)) / -np.expm1(-2.0 * alpha)
    out = field + s * prob
    return out if out.ndim else float(out)


def mf_energy_curvature(theta, s: float, alpha: float):
    """Second theta-derivative of mf_energy at phi = 0 (closed form)."""
    theta = np.asarray(theta, dtype=np.float64)
    if alpha < 1e-8:
        curv = (1.0 - s) * np.sin(theta) / 2.0 + s * np.cos(theta) / 2.0
    else:
        z = np.exp(alpha * (np.cos(theta) - 1.0)) / -np.expm1(-2.0 * alpha)
        curv = (1.0 - s) * np.sin(theta) / 2.0 + s * alpha * (
            np.cos(theta) - alpha * np.sin(theta) ** 2
        ) * z
    return curv if curv.ndim else float(curv)


_THETA_GRID = 2001


def _refine_theta(s: float, alpha: float, lo: float, hi: float, xatol: float) -> float:
    r = minimize_scalar(
        lambda t: mf_energy(t, 0.0, s, alpha),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": xatol},
    )
    return float(r.x)


def _local_minima(s: float, alpha: float, grid: int, xatol: float):
    """All local minima of the phi=0 energy over theta in [0, pi], refined."""
    th = np.linspace(0.0, math.pi, grid)
    e = mf_energy(th, 0.0, s, alpha)
    step = th[1] - th[0]
    out = []
    for i in range(grid):
        left = e[i - 1] if i > 0 else np.inf
        right = e[i + 1] if i < grid - 1 else np.inf
        if e[i] <= left and e[i] <= right:
            lo = max(0.0, th[i] - step)
            hi = min(math.pi, th[i] + step)
            t = _refine_theta(s, alpha, lo, hi, xatol)
            out.append((t, mf_energy(t, 0.0, s, alpha)))
    # merge refinements that collapsed onto the same minimum
    out.sort()
    merged: list[tuple[float, float]] = []
    for t, en in out:
        if merged and abs(t - merged[-1][0]) < _THETA_SEPARATION:
            if en < merged[-1][1]:
                merged[-1] = (t, en)
        else:
            merged.append((t, en))
    return merged


@dataclass(frozen=True)
class MeanFieldSolution:
    theta: float
    phi: float
    energy: float
    degenerate: bool
    minima: tuple[tuple[float, float], ...]  # (theta, energy) of global-tied minima


@dataclass(frozen=True)
class TransitionPoint:
    alpha: float
    s_c: float
    order: str  # 'first' | 'second' | 'none'
    sx_jump: float


def mf_minimize(
    s: float,
    alpha: float,
    grid: int = _THETA_GRID,
    refine_tolerance: float = 1e-12,
) -> MeanFieldSolution:
    """Global minimum of the ansatz energy over theta (phi fixed to 0).

    degenerate flags two local minima separated by more than 1e-3 in theta
    whose energies agree within 1e-10; both are recorded.
    """
    if refine_tolerance <= 0.0:
        raise ValueError("refine_tolerance must be positive")
    minima = _local_minima(s, alpha, grid, refine_tolerance)
    e_best = min(en for _, en in minima)
    tied = tuple((t, en) for t, en in minima if en <= e_best + _DEGENERACY_ENERGY_TOL)
    t_best = min(tied, key=lambda p: p[1])[0]
    return MeanFieldSolution(
        theta=float(t_best),
        phi=0.0,
        energy=float(e_best),
        degenerate=len(tied) >= 2,
        minima=tied,
    )


def _theta_star_grid(s_values: np.ndarray, alpha: float, grid: int = _THETA_GRID):
    """Vectorized theta*(s): grid argmin refined by golden section per point."""
    th = np.linspace(0.0, math.pi, grid)
    hp = _hp_term(th, alpha)
    field = (1.0 - np.sin(th)) / 2.0
    e = np.outer(1.0 - s_values, field) + np.outer(s_values, hp)
    idx = np.argmin(e, axis=1)
    step = th[1] - th[0]
    lo = np.clip(th[idx] - step, 0.0, math.pi)
    hi = np.clip(th[idx] + step, 0.0, math.pi)
    invphi = (math.sqrt(5.0) - 1.0) / 2.0

    # golden section vectorized over all s at once; both probes recomputed each
    # iteration, which keeps the interval update branch-free
    def energy_at(t):
        return (1.0 - s_values) * (1.0 - np.sin(t)) / 2.0 + s_values * _hp_term(
            t, alpha
        )

    for _ in range(75):
        c = hi - invphi * (hi - lo)
        d = lo + invphi * (hi - lo)
        less = energy_at(c) < energy_at(d)
        hi = np.where(less, d, hi)
        lo = np.where(less, lo, c)
    return 0.5 * (lo + hi)


def sx_surface(alpha_grid, s_grid) -> np.ndarray:
    """<s_x> = sin(theta*)/2 on the alpha x s grid; rows follow alpha_grid."""
    alphas = np.asarray(alpha_grid, dtype=np.float64)
    ss = np.asarray(s_grid, dtype=np.float64)
    if np.any(np.diff(alphas) <= 0) and alphas.size > 1:
        raise ValueError("alpha_grid must be ascending")
    if np.any(np.diff(ss) <= 0) and ss.size > 1:
        raise ValueError("s_grid must be ascending")
    out = np.empty((alphas.size, ss.size))
    for i, alpha in enumerate(alphas):
        theta = _theta_star_grid(ss, alpha)
        out[i] = 0.5 * np.sin(theta)
    return out


def _theta_star(s: float, alpha: float) -> float:
    return float(_theta_star_grid(np.array([s]), alpha)[0])


def _global_theta(s: float, alpha: float) -> float:
    mins = _local_minima(s, alpha, _THETA_GRID, 1e-13)
    return min(mins, key=lambda p: p[1])[0]


def transition_line(alpha: float, s_resolution: float = 1e-10) -> TransitionPoint:
    """Classify the transition in s at fixed alpha.

    Tracks theta*(s), bisects the steepest move down to s_resolution (branch
    membership decided by refined local minima, so the crossing is located at
    energy precision, not grid precision), then classifies: first order when
    two local minima sit more than 1e-3 apart in theta with energies
    degenerate to 1e-10 and an <s_x> jump above 1e-4; second order when
    instead the single minimum becomes quartically flat (curvature below
    1e-4, the measure-zero endpoint); none otherwise.
    """
    if s_resolution <= 0.0:
        raise ValueError("s_resolution must be positive")
    ss = np.linspace(0.0, 1.0, 1001)
    theta = _theta_star_grid(ss, alpha)
    i = int(np.argmax(np.abs(np.diff(theta))))
    a, b = float(ss[i]), float(ss[i + 1])
    ta = _global_theta(a, alpha)
    tb = _global_theta(b, alpha)
    while b - a > s_resolution:
        m = 0.5 * (a + b)
        tm = _global_theta(m, alpha)
        if abs(tm - ta) < abs(tm - tb):
            a, ta = m, tm
        else:
            b, tb = m, tm
    s_c = 0.5 * (a + b)
    mins = sorted(_local_minima(s_c, alpha, _THETA_GRID, 1e-13), key=lambda p: p[1])
    if len(mins) >= 2:
        (t0, e0), (t1, e1) = mins[0], mins[1]
        if abs(t1 - t0) > _THETA_SEPARATION and e1 - e0 < _DEGENERACY_ENERGY_TOL:
            jump = 0.5 * abs(math.sin(t1) - math.sin(t0))
            if jump > _SX_JUMP_TOL:
                return TransitionPoint(
                    alpha=alpha, s_c=float(s_c), order="first", sx_jump=jump
                )
    # single effective minimum: find the flattest point of the branch
    def curvature_at(s: float) -> float:
        return float(mf_energy_curvature(_global_theta(s, alpha), s, alpha))

    r = minimize_scalar(
        curvature_at,
        bounds=(max(0.0, s_c - 0.05), min(1.0, s_c + 0.05)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if float(r.fun) < _CURVATURE_TOL:
        return TransitionPoint(alpha=alpha, s_c=float(r.x), order="second", sx_jump=0.0)
    return TransitionPoint(alpha=alpha, s_c=float(r.x), order="none", sx_jump=0.0)


def critical_point(tolerance: float = 1e-4) -> tuple[float, float]:
    """Bisect alpha on the first-order flag of transition_line.

    Returns (alpha_c, s_endpoint), the threshold steepness and the s where
    degenerate minima first appear (taken at the last first-order probe).
    """
    if tolerance <= 0.0:
        raise ValueError("tolerance must be positive")
    lo, hi = 2.0, 4.0
    tp_hi = transition_line(hi)
    if tp_hi.order != "first":
        raise RuntimeError("bracket [2, 4] does not contain the first-order onset")
    s_end = tp_hi.s_c
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        tp = transition_line(mid)
        if tp.order == "first":
            hi = mid
            s_end = tp.s_c
        else:
            lo = mid
    return 0.5 * (lo + hi), float(s_end)


def endpoint_s_candidates() -> tuple[float, float]:
    """The two parenthesization readings of the closed-form endpoint
    s-coordinate quoted for the second-order point; reported for comparison
    against the numerically located endpoint, asserting neither."""
    base = 3.0 * math.sqrt(6.0) * math.exp(1.5)
    sh = math.sinh(ALPHA_C)
    return 2.0 / (2.0 + base / sh), 2.0 / (2.0 + base * sh)
