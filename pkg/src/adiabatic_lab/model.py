"""Symmetric-sector Hamiltonians for the two-parameter adiabatic interpolation.

The interpolation H(s) = (1-s)*H0 + s*HP(alpha) acts on n qubits.  H0 is a
normalized transverse field, HP(alpha) is diagonal in the computational basis
and permutation symmetric, with a steepness parameter alpha >= 0 that tunes it
from a decoupled single-qubit sum (alpha -> 0) to a projector onto the marked
state (alpha -> inf).  Both commute with total spin, so everything here lives
in the maximal-spin sector: an (n+1)-dimensional space with basis |j=n/2, m>,
m = -j..j, in which H(s) is real symmetric tridiagonal.

Index convention, used repo-wide: k = 0..n with m = k - n/2, so the s=1 ground
state |00...0> sits at the last index k = n.  Excitation count q = n - k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ModelParams",
    "TridiagonalOperator",
    "SymmetricState",
    "ladder_coefficients",
    "build_h0",
    "build_hp",
    "build_hs",
    "hp_level",
    "level_energies_s1",
]


@dataclass(frozen=True)
class ModelParams:
    """Point in parameter space: qubit count n, interaction steepness alpha,
    path parameter s.  alpha = math.inf selects the projector limit."""

    n: int
    alpha: float
    s: float

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if math.isnan(self.alpha) or self.alpha < 0.0:
            raise ValueError(f"alpha must be >= 0 (or inf), got {self.alpha!r}")
        if not 0.0 <= self.s <= 1.0:
            raise ValueError(f"s must lie in [0, 1], got {self.s!r}")


@dataclass(frozen=True)
class TridiagonalOperator:
    """Real symmetric tridiagonal operator: diagonal of length dim and a single
    off-diagonal of length dim-1."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.ascontiguousarray(self.diag, dtype=np.float64)
        e = np.ascontiguousarray(self.offdiag, dtype=np.float64)
        if d.ndim != 1 or e.ndim != 1 or e.shape[0] != max(d.shape[0] - 1, 0):
            raise ValueError("offdiag length must be dim - 1")
        d.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def dim(self) -> int:
        return self.diag.shape[0]

    def matvec(self, x: np.ndarray) -> np.ndarray:
        y = self.diag * x
        if self.dim > 1:
            y[:-1] += self.offdiag * x[1:]
            y[1:] += self.offdiag * x[:-1]
        return y

    def to_dense(self) -> np.ndarray:
        a = np.diag(self.diag)
        if self.dim > 1:
            a += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return a


@dataclass(frozen=True)
class SymmetricState:
    """Real unit vector over the Dicke basis, amp[k] on |n/2, m=k-n/2>."""

    n: int
    amp: np.ndarray = field(repr=False)

    _NORM_TOL = 1e-12

    def __post_init__(self):
        a = np.ascontiguousarray(self.amp, dtype=np.float64)
        if a.shape != (self.n + 1,):
            raise ValueError(f"amplitude vector must have length n+1 = {self.n + 1}")
        if abs(a @ a - 1.0) > self._NORM_TOL:
            raise ValueError(f"state not normalized: sum amp^2 = {a @ a!r}")
        a.setflags(write=False)
        object.__setattr__(self, "amp", a)

    @classmethod
    def x_polarized(cls, n: int) -> "SymmetricState":
        """All qubits along +x; Dicke amplitudes sqrt(C(n,k)/2^n)."""
        return cls(n, np.sqrt(_binomial_weights(n)))

    @classmethod
    def z_polarized(cls, n: int) -> "SymmetricState":
        """All qubits along +z, i.e. |00...0>: the unit vector at k = n."""
        a = np.zeros(n + 1)
        a[n] = 1.0
        return cls(n, a)


def _binomial_weights(n: int) -> np.ndarray:
    """C(n,k)/2^n for k = 0..n, exact for small n, log-domain for large n."""
    if n <= 500:
        return np.array([math.comb(n, k) for k in range(n + 1)], dtype=np.float64) / 2.0**n
    lg = math.lgamma(n + 1)
    k = np.arange(n + 1.0)
    from scipy.special import gammaln

    return np.exp(lg - gammaln(k + 1) - gammaln(n - k + 1) - n * math.log(2.0))


def ladder_coefficients(n: int) -> np.ndarray:
    """t(m) = 0.5*sqrt(j(j+1) - m(m+1)) with j = n/2, for m = k - n/2,
    k = 0..n-1; these are the <m+1|S_x|m> matrix elements."""
    j = n / 2.0
    m = np.arange(n, dtype=np.float64) - j
    return 0.5 * np.sqrt(j * (j + 1.0) - m * (m + 1.0))


def build_h0(n: int) -> TridiagonalOperator:
    """Transverse-field start Hamiltonian I/2 - S_x/n.

    Spectrum is {0, 1/n, ..., 1}; the ground state is the x-polarized
    product state with energy exactly 0.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    diag = np.full(n + 1, 0.5)
    offdiag = -ladder_coefficients(n) / n
    return TridiagonalOperator(diag, offdiag)


def hp_level(n: int, alpha: float, q) -> np.ndarray:
    """Energy of the q-excitation level of HP(alpha), q = number of flipped
    spins from |00...0>.

    Evaluated as (1 - e^{-2 alpha q / n}) / (1 - e^{-2 alpha}), which is
    algebraically identical to the ratio of exponentials but free of overflow
    for large alpha.  Limits: q/n at alpha = 0, step function at alpha = inf.
    """
    q = np.asarray(q, dtype=np.float64)
    if alpha < 1e-8:
        return q / n
    if math.isinf(alpha):
        return np.where(q == 0.0, 0.0, 1.0)
    return np.expm1(-2.0 * alpha * q / n) / np.expm1(-2.0 * alpha)


def build_hp(n: int, alpha: float) -> TridiagonalOperator:
    """Diagonal problem Hamiltonian HP(alpha) in the Dicke basis.

    diag[k] is the energy of the level with q = n - k excitations; the ground
    state (energy exactly 0) sits at k = n.  alpha = 0 and alpha = inf use the
    analytic limit forms.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if math.isnan(alpha) or alpha < 0.0:
        raise ValueError(f"alpha must be >= 0 (or inf), got {alpha!r}")
    q = n - np.arange(n + 1, dtype=np.float64)
    return TridiagonalOperator(hp_level(n, alpha, q), np.zeros(n))


def build_hs(params: ModelParams) -> TridiagonalOperator:
    """Interpolation (1-s)*H0 + s*HP(alpha), elementwise on the tridiagonals."""
    h0 = build_h0(params.n)
    hp = build_hp(params.n, params.alpha)
    s = params.s
    return TridiagonalOperator(
        (1.0 - s) * h0.diag + s * hp.diag, (1.0 - s) * h0.offdiag
    )


def level_energies_s1(n: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Exact s=1 spectrum over the full 2^n space.

    Returns (omega, degeneracy): omega[q] is the energy of the level with q
    flipped spins and degeneracy[q] = C(n,q).  Degeneracies are exact integers
    represented as floats (exact below 2^53).
    """
    if math.isnan(alpha) or alpha < 0.0:
        raise ValueError(f"alpha must be >= 0 (or inf), got {alpha!r}")
    q = np.arange(n + 1, dtype=np.float64)
    omega = hp_level(n, alpha, q)
    if n <= 1000:
        deg = np.array([math.comb(n, k) for k in range(n + 1)], dtype=np.float64)
    else:
        from scipy.special import gammaln

        deg = np.exp(gammaln(n + 1) - gammaln(q + 1) - gammaln(n - q + 1))
    return omega, deg
