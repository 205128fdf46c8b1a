"""Brute-force 2^n cross-check for the symmetric-sector construction.

Everything here is built from explicit Pauli tensor products on the full
2^n-dimensional space: the interpolated Hamiltonian, the bit-flip gauge
transformation, and the projection onto Dicke states assembled as normalized
sums of bit-strings.  The Dicke projection deliberately avoids the ladder
coefficients used by the model module, so agreement between the two routes is
a non-circular check.

Dense operators are plain float64 (or complex128) square ndarrays.  Solution
masks are length-n sequences of bits, w[k] in {0, 1}.  The guard n <= 14 keeps
the dense route inside verification territory.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .model import ModelParams, hp_level

__all__ = [
    "MAX_DENSE_QUBITS",
    "build_full",
    "apply_gauge",
    "symmetric_sector",
    "dicke_projector",
    "collective_spin",
    "total_spin_squared",
    "product_form_deviation",
    "run_equivalence_suite",
]

MAX_DENSE_QUBITS = 14

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_ID = np.eye(2)


def _check_n(n: int):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > MAX_DENSE_QUBITS:
        raise ValueError(f"dense oracle is capped at n = {MAX_DENSE_QUBITS}, got {n}")


def _site_operator(op: np.ndarray, site: int, n: int) -> np.ndarray:
    """op acting on one qubit, identity elsewhere (site 0 = leftmost factor)."""
    out = np.array([[1.0 + 0.0j]]) if np.iscomplexobj(op) else np.array([[1.0]])
    for k in range(n):
        out = np.kron(out, op if k == site else _ID)
    return out


def collective_spin(n: int, axis: str) -> np.ndarray:
    """S_axis = (1/2) sum_k sigma_axis^(k) on the full 2^n space."""
    _check_n(n)
    pauli = {"x": _SX, "y": _SY, "z": _SZ}[axis]
    dim = 2**n
    total = np.zeros((dim, dim), dtype=pauli.dtype)
    for k in range(n):
        total += _site_operator(pauli, k, n)
    return 0.5 * total


@lru_cache(maxsize=4)
def _total_spin_squared_cached(n: int) -> np.ndarray:
    sx = collective_spin(n, "x")
    sy = collective_spin(n, "y")
    sz = collective_spin(n, "z")
    out = (sx @ sx + (sy @ sy).real + sz @ sz).real
    out.setflags(write=False)
    return out


def total_spin_squared(n: int) -> np.ndarray:
    """S^2 = S_x^2 + S_y^2 + S_z^2 (real symmetric; the S_y^2 part is real)."""
    return _total_spin_squared_cached(n)


def build_full(params: ModelParams) -> np.ndarray:
    """Dense H(s, alpha) = (1-s)(I/2 - S_x/n) + s * HP(alpha) on 2^n states.

    HP comes from exponentiating the Pauli-built S_z: its diagonal entry for a
    bit-string with q ones is the same overflow-free level formula used in the
    Dicke construction.
    """
    n = params.n
    _check_n(n)
    dim = 2**n
    sx = collective_spin(n, "x")
    sz = collective_spin(n, "z")
    h0 = 0.5 * np.eye(dim) - sx / n
    q = n / 2.0 - np.diag(sz)  # excitation count of each bit-string
    hp = np.diag(hp_level(n, params.alpha, q))
    return (1.0 - params.s) * h0 + params.s * hp


def product_form_deviation(n: int, alpha: float) -> float:
    """Max entrywise deviation between the product operator
    prod_k (I + p sigma_z^(k)) with p = tanh(alpha/n) and its collective form
    (1-p^2)^(n/2) exp(2 atanh(p) S_z).  Zero up to roundoff.

    The normalization exponent is +n/2: per qubit,
    I + p sigma_z = sqrt(1-p^2) exp(atanh(p) sigma_z).
    """
    _check_n(n)
    from scipy.linalg import expm

    p = math.tanh(alpha / n)
    dim = 2**n
    prod = np.eye(dim)
    for k in range(n):
        prod = prod @ (np.eye(dim) + p * _site_operator(_SZ, k, n))
    sz = collective_spin(n, "z")
    collective = (1.0 - p * p) ** (n / 2.0) * expm(2.0 * math.atanh(p) * sz)
    return float(np.max(np.abs(prod - collective)))


def apply_gauge(h: np.ndarray, mask) -> np.ndarray:
    """Conjugate by U = prod_k (sigma_x^(k))^mask[k]: relabels the marked
    bit-string without touching the spectrum."""
    mask = np.asarray(mask, dtype=np.int64)
    if mask.ndim != 1 or not np.all((mask == 0) | (mask == 1)):
        raise ValueError("mask must be a flat sequence of bits")
    n = mask.shape[0]
    if h.shape != (2**n, 2**n):
        raise ValueError(f"operator shape {h.shape} does not match n = {n} qubits")
    u = np.array([[1.0]])
    for bit in mask:
        u = np.kron(u, _SX if bit else _ID)
    return u @ h @ u.T


@lru_cache(maxsize=4)
def _dicke_projector_cached(n: int) -> np.ndarray:
    dim = 2**n
    pops = np.array([bin(i).count("1") for i in range(dim)])
    rows = np.zeros((n + 1, dim))
    for k in range(n + 1):
        q = n - k
        rows[k, pops == q] = 1.0 / math.sqrt(math.comb(n, q))
    rows.setflags(write=False)
    return rows


def dicke_projector(n: int) -> np.ndarray:
    """(n+1) x 2^n isometry whose row k is the Dicke state |n/2, m=k-n/2>:
    the equal-amplitude sum over the C(n,q) bit-strings with q = n - k ones,
    normalized by 1/sqrt(C(n,q))."""
    _check_n(n)
    return _dicke_projector_cached(n)


def symmetric_sector(h: np.ndarray, n: int, comm_tol: float = 1e-10) -> np.ndarray:
    """Project a permutation-symmetric dense operator onto the maximal-spin
    sector; the result is the (n+1) x (n+1) block in the Dicke basis.

    Raises if h does not commute with S^2 (relative to its norm), since the
    projection is only meaningful for permutation-symmetric input.
    """
    _check_n(n)
    if h.shape != (2**n, 2**n):
        raise ValueError(f"operator shape {h.shape} does not match n = {n} qubits")
    s2 = total_spin_squared(n)
    comm = h @ s2 - s2 @ h
    scale = max(float(np.max(np.abs(h))), 1.0) * float(np.max(np.abs(s2)))
    if float(np.max(np.abs(comm))) > comm_tol * scale:
        raise ValueError("operator does not commute with S^2; not permutation symmetric")
    p = dicke_projector(n)
    return p @ h @ p.T


def run_equivalence_suite(
    n_max: int = 10,
    alphas=(0.0, 0.5, 1.5, 3.0, 8.0),
    s_values=(0.0, 0.25, 0.5, 0.75, 1.0),
    sector_tol: float = 1e-10,
    gauge_tol: float = 1e-12,
    seed: int = 7,
) -> list[tuple[str, bool, float]]:
    """Cross-check the Dicke-basis construction against the dense route.

    Per n up to n_max and each (alpha, s) grid point: the tridiagonal
    eigenvalues must match the dense operator's maximal-spin block to
    sector_tol, the projected block must match the tridiagonal entrywise to
    1e-12, and a seeded random gauge mask must leave the full spectrum
    invariant to gauge_tol.  Returns (check name, passed, worst deviation).
    """
    from .eigensolver import eigen_all
    from .model import ModelParams, build_hs

    rng = np.random.default_rng(seed)
    results = []
    for n in range(1, n_max + 1):
        worst_sector = 0.0
        worst_entry = 0.0
        worst_gauge = 0.0
        for alpha in alphas:
            for s in s_values:
                params = ModelParams(n, float(alpha), float(s))
                tri = build_hs(params)
                dense = build_full(params)
                block = symmetric_sector(dense, n)
                ev_tri = eigen_all(tri).values
                ev_block = np.linalg.eigvalsh(block)
                worst_sector = max(worst_sector, float(np.max(np.abs(ev_tri - ev_block))))
                worst_entry = max(
                    worst_entry, float(np.max(np.abs(block - tri.to_dense())))
                )
                mask = rng.integers(0, 2, n)
                gauged = apply_gauge(dense, mask)
                dev = np.max(
                    np.abs(np.linalg.eigvalsh(dense) - np.linalg.eigvalsh(gauged))
                )
                worst_gauge = max(worst_gauge, float(dev))
        results.append((f"sector eigenvalues n={n}", worst_sector <= sector_tol, worst_sector))
        results.append((f"sector entrywise n={n}", worst_entry <= 1e-12, worst_entry))
        results.append((f"gauge spectrum n={n}", worst_gauge <= gauge_tol, worst_gauge))
    for n in range(2, min(n_max, 6) + 1):
        dev = product_form_deviation(n, 2.0)
        results.append((f"product form n={n}", dev <= 1e-12, dev))
    return results
