"""Schrodinger evolution along the affine schedule s = t/T.

The state starts in the x-polarized ground state of H(0) and is stepped with
the Crank-Nicolson (Cayley) rule, which is unitary per step up to roundoff;
accuracy is controlled by doubling the step count until the final fidelity
moves by less than 1e-6.  Fidelity is the squared overlap with the s=1 ground
state, accumulated in extended precision so that the T=0 quench value is the
exact dyadic 2^-n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._kernels import cn_propagate
from .eigensolver import ground_pair
from .model import ModelParams, SymmetricState, build_h0, build_hp, build_hs

__all__ = ["EvolutionResult", "RequiredTime", "evolve", "required_time_scan"]

_FIDELITY_STEP_TOL = 1e-6


@dataclass(frozen=True)
class EvolutionResult:
    final_state: np.ndarray = field(repr=False)
    fidelity: float
    norm_drift: float
    T: float
    steps: int


@dataclass(frozen=True)
class RequiredTime:
    n: int
    t_star: float
    min_gap: float
    inv_gap_sq: float


def _x_state_extended(n: int) -> np.ndarray:
    """x-polarized amplitudes in extended precision from exact dyadic weights."""
    w = np.array([math.comb(n, k) for k in range(n + 1)], dtype=np.longdouble)
    return np.sqrt(w / np.longdouble(2.0) ** n)


def _target_state(n: int, alpha: float) -> np.ndarray:
    """Ground state of H(s=1) in extended precision.

    The problem Hamiltonian is diagonal with a strictly smallest entry at
    k = n, so the target is that basis vector; kept general via the solver as
    a cross-check in tests.
    """
    gs = np.zeros(n + 1, dtype=np.longdouble)
    gs[n] = 1.0
    return gs


def _run(n: int, alpha: float, T: float, steps: int) -> tuple[np.ndarray, float, float]:
    psi0_ext = _x_state_extended(n)
    psi0 = psi0_ext.astype(np.float64)
    h0 = build_h0(n)
    hp = build_hp(n, alpha)
    if steps == 0 or T == 0.0:
        psi_ext = psi0_ext.astype(np.clongdouble)
    else:
        psi = cn_propagate(h0.diag, h0.offdiag, hp.diag, T, steps, psi0)
        psi_ext = psi.astype(np.clongdouble)
    target = _target_state(n, alpha)
    overlap = np.sum(target * psi_ext)
    fidelity = float((overlap * np.conj(overlap)).real)
    norm = float(np.sqrt(np.sum((psi_ext * np.conj(psi_ext)).real)))
    return psi_ext.astype(np.complex128), fidelity, abs(norm - 1.0)


def evolve(n: int, alpha: float, T: float, steps: int | None = None) -> EvolutionResult:
    """Evolve from the H(0) ground state over total time T (hbar = 1).

    With steps=None the step count starts near 16 per unit time and doubles
    until the fidelity change under halving is below 1e-6.
    """
    if not (math.isfinite(T) and T >= 0.0):
        raise ValueError(f"T must be finite and >= 0, got {T!r}")
    if math.isnan(alpha) or alpha < 0.0:
        raise ValueError(f"alpha must be >= 0, got {alpha!r}")
    if steps is not None:
        if steps < 1:
            raise ValueError("steps must be >= 1")
        psi, fid, drift = _run(n, alpha, T, int(steps))
        return EvolutionResult(psi, fid, drift, T, int(steps))
    if T == 0.0:
        psi, fid, drift = _run(n, alpha, 0.0, 0)
        return EvolutionResult(psi, fid, drift, 0.0, 0)
    m = max(128, int(16.0 * T))
    psi, fid, drift = _run(n, alpha, T, m)
    while True:
        m2 = 2 * m
        psi2, fid2, drift2 = _run(n, alpha, T, m2)
        if abs(fid2 - fid) < _FIDELITY_STEP_TOL or m2 >= 2**22:
            return EvolutionResult(psi2, fid2, drift2, T, m2)
        m, psi, fid, drift = m2, psi2, fid2, drift2


def required_time_scan(
    n_list,
    alpha: float,
    fidelity_target: float,
    t_max: float = 1e6,
) -> list[RequiredTime]:
    """Bisect the smallest T reaching the target fidelity for each n.

    Reports the minimum gap and its inverse square alongside, for correlation
    with the adiabatic-time criterion.  Raises if the bracket cannot be grown
    to t_max.
    """
    if not 0.0 < fidelity_target < 1.0:
        raise ValueError("fidelity_target must lie in (0, 1)")
    from .spectral import min_gap

    out = []
    for n in n_list:
        n = int(n)
        lo = 0.0
        hi = 4.0
        while evolve(n, alpha, hi).fidelity < fidelity_target:
            lo = hi
            hi *= 2.0
            if hi > t_max:
                raise RuntimeError(
                    f"no T <= {t_max} reaches fidelity {fidelity_target} at n={n} "
                    f"(last bracket [{lo}, {hi}])"
                )
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            if evolve(n, alpha, mid).fidelity < fidelity_target:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-3 * max(hi, 1.0):
                break
        _, gap = min_gap(n, alpha)
        out.append(
            RequiredTime(
                n=n, t_star=0.5 * (lo + hi), min_gap=gap, inv_gap_sq=1.0 / gap**2
            )
        )
    return out
