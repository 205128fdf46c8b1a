"""Collective-spin expectation values, rescaled concurrence, and state anatomy.

All operators act on real symmetric-sector states.  S_x is tridiagonal in the
Dicke basis; S_y^2 and S_x^2 combine a diagonal (S^2 - S_z^2)/2 piece with
k <-> k+2 couplings from the squared ladder operators.  The rescaled
concurrence of the (n-2)-qubit-traced ground state reduces, for real states,
to C_R = 1 - 4<S_y^2>/n; a Wootters reduced-density-matrix oracle is kept for
ground truth at small n, since the closed formula can go negative on states
(one-excitation Dicke states, for instance) whose true concurrence is positive.
"""

from __future__ import annotations

import math

import numpy as np

from .model import SymmetricState, _binomial_weights, ladder_coefficients

__all__ = [
    "StateAnatomy",
    "expect_sx",
    "expect_sz",
    "expect_sz2",
    "expect_sx2",
    "expect_sy2",
    "rescaled_concurrence",
    "wootters_oracle",
    "anatomy",
]

_NORM_TOL = 1e-8


def _amps(state: SymmetricState) -> tuple[np.ndarray, int]:
    a = state.amp
    if abs(a @ a - 1.0) > _NORM_TOL:
        raise ValueError("state is not normalized")
    return a, state.n


def _mz(n: int) -> np.ndarray:
    return np.arange(n + 1, dtype=np.float64) - n / 2.0


def expect_sx(state: SymmetricState) -> float:
    """<S_x> = sum_k 2 t(m_k) amp[k] amp[k+1]."""
    a, n = _amps(state)
    t = ladder_coefficients(n)
    return float(2.0 * np.sum(t * a[:-1] * a[1:]))


def expect_sz(state: SymmetricState) -> float:
    a, n = _amps(state)
    return float(np.sum(_mz(n) * a * a))


def expect_sz2(state: SymmetricState) -> float:
    a, n = _amps(state)
    return float(np.sum(_mz(n) ** 2 * a * a))


def _ladder_sq(n: int) -> np.ndarray:
    """<m+2| S_+^2 |m> for m = k - n/2, k = 0..n-2."""
    j = n / 2.0
    m = _mz(n)[:-2]
    return np.sqrt(j * (j + 1.0) - m * (m + 1.0)) * np.sqrt(
        j * (j + 1.0) - (m + 1.0) * (m + 2.0)
    )


def expect_sy2(state: SymmetricState) -> float:
    """<S_y^2> from S_y^2 = (S^2 - S_z^2)/2 - (S_+^2 + S_-^2)/4."""
    a, n = _amps(state)
    j = n / 2.0
    diag = (j * (j + 1.0) - _mz(n) ** 2) / 2.0
    coupling = 0.0
    if n >= 2:
        coupling = np.sum(_ladder_sq(n) * a[:-2] * a[2:])
    return float(np.sum(diag * a * a) - 0.5 * coupling)


def expect_sx2(state: SymmetricState) -> float:
    """<S_x^2> from S_x^2 = (S^2 - S_z^2)/2 + (S_+^2 + S_-^2)/4."""
    a, n = _amps(state)
    j = n / 2.0
    diag = (j * (j + 1.0) - _mz(n) ** 2) / 2.0
    coupling = 0.0
    if n >= 2:
        coupling = np.sum(_ladder_sq(n) * a[:-2] * a[2:])
    return float(np.sum(diag * a * a) + 0.5 * coupling)


def rescaled_concurrence(state: SymmetricState) -> float:
    """C_R = 1 - 4 <S_y^2> / n, reported raw (may be negative; see module
    docstring)."""
    return 1.0 - 4.0 * expect_sy2(state) / state.n


def wootters_oracle(state: SymmetricState, max_qubits: int = 12) -> float:
    """(n-1) times the Wootters concurrence of the two-qubit reduced state.

    The symmetric state is expanded over all 2^n bit-strings, two qubits are
    kept, and the spin-flip eigenvalues come from the symmetric form
    |eig(sqrt(rho) Y sqrt(rho))| with Y = sigma_y x sigma_y, which is exact
    for the real density matrices produced here.
    """
    a, n = _amps(state)
    if n > max_qubits:
        raise ValueError(f"wootters_oracle is capped at n = {max_qubits}")
    dim = 2**n
    pops = np.array([bin(i).count("1") for i in range(dim)])
    psi = np.zeros(dim)
    for k in range(n + 1):
        q = n - k
        psi[pops == q] = a[k] / math.sqrt(math.comb(n, q))
    m = psi.reshape(4, dim // 4)
    rho = m @ m.T
    w, v = np.linalg.eigh(rho)
    w = np.clip(w, 0.0, None)
    root = (v * np.sqrt(w)) @ v.T
    y = np.zeros((4, 4))
    y[0, 3] = y[3, 0] = -1.0
    y[1, 2] = y[2, 1] = 1.0
    lam = np.sort(np.abs(np.linalg.eigvalsh(root @ y @ root)))[::-1]
    c = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
    return (n - 1) * c


class StateAnatomy:
    """Overlaps with the two polarized product states plus the full Dicke
    weight profile."""

    __slots__ = ("overlap_x", "overlap_z", "dicke_weights")

    def __init__(self, overlap_x: float, overlap_z: float, dicke_weights: np.ndarray):
        self.overlap_x = overlap_x
        self.overlap_z = overlap_z
        self.dicke_weights = dicke_weights


def x_overlap(state: SymmetricState) -> float:
    """|<x-polarized | state>|^2 via the binomial amplitude expansion."""
    a, n = _amps(state)
    bx = np.sqrt(_binomial_weights(n))
    return float((bx @ a) ** 2)


def anatomy(state: SymmetricState) -> StateAnatomy:
    a, n = _amps(state)
    return StateAnatomy(
        overlap_x=x_overlap(state),
        overlap_z=float(a[n] ** 2),
        dicke_weights=a * a,
    )
