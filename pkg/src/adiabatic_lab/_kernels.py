"""Hot numerical kernels with two interchangeable backends.

The numba backend jit-compiles the inner loops (Sturm-sequence bisection,
inverse iteration, Crank-Nicolson stepping).  Setting ADIABATIC_LAB_NO_NUMBA=1
(or running without numba installed) selects the fallback backend built on
scipy's LAPACK tridiagonal wrappers.  Both backends satisfy the same
contracts and are cross-checked in the test suite; benchmarks/bench_backends.py
compares their throughput.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("ADIABATIC_LAB_NO_NUMBA", "").strip().lower()
_DISABLED = _FLAG not in ("", "0", "false")

NUMBA_ENABLED = False
if not _DISABLED:
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):
        # identity decorator so the kernel source stays importable
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


_EPS = float(np.finfo(np.float64).eps)


# ---------------------------------------------------------------------------
# numba path: Sturm bisection + inverse iteration
# ---------------------------------------------------------------------------

@njit(cache=True)
def _gershgorin(d, e):
    lo = d[0]
    hi = d[0]
    dim = d.shape[0]
    for i in range(dim):
        r = 0.0
        if i > 0:
            r += abs(e[i - 1])
        if i < dim - 1:
            r += abs(e[i])
        if d[i] - r < lo:
            lo = d[i] - r
        if d[i] + r > hi:
            hi = d[i] + r
    return lo, hi


@njit(cache=True)
def _sturm_count(d, e2, x):
    # number of eigenvalues strictly below x (LDL^T pivot signs)
    count = 0
    q = d[0] - x
    if q < 0.0:
        count += 1
    for i in range(1, d.shape[0]):
        if q == 0.0:
            q = _EPS * _EPS
        q = d[i] - x - e2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def _bisect_index(d, e2, k, lo, hi):
    # eigenvalue number k (0-based, ascending) by bisection on the count
    a = lo
    b = hi
    for _ in range(200):
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if _sturm_count(d, e2, mid) > k:
            b = mid
        else:
            a = mid
    return 0.5 * (a + b)


@njit(cache=True)
def _eigvals_bisect(d, e, k_lo, k_hi):
    dim = d.shape[0]
    e2 = e * e
    lo, hi = _gershgorin(d, e)
    span = hi - lo
    if span == 0.0:
        span = 1.0
    lo -= _EPS * span
    hi += _EPS * span
    out = np.empty(k_hi - k_lo + 1)
    for k in range(k_lo, k_hi + 1):
        out[k - k_lo] = _bisect_index(d, e2, k, lo, hi)
    return out


@njit(cache=True)
def _solve_shifted(d, e, lam, b):
    """Solve (T - lam*I) x = b with partial pivoting (fill-in on the second
    superdiagonal); safe for the nearly singular shifts of inverse iteration."""
    dim = d.shape[0]
    # working copies of the three bands plus fill-in
    du2 = np.zeros(dim)
    du = np.empty(dim)
    dd = np.empty(dim)
    x = b.copy()
    for i in range(dim):
        dd[i] = d[i] - lam
        du[i] = e[i] if i < dim - 1 else 0.0
    dl = e.copy()
    for i in range(dim - 1):
        if abs(dd[i]) >= abs(dl[i]):
            if dd[i] == 0.0:
                dd[i] = _EPS * _EPS
            f = dl[i] / dd[i]
            dd[i + 1] -= f * du[i]
            x[i + 1] -= f * x[i]
            if i < dim - 2:
                du2[i] = 0.0
        else:
            # swap rows i and i+1
            f = dd[i] / dl[i]
            dd_i = dl[i]
            du_i = dd[i + 1]
            du2_i = du[i + 1] if i < dim - 2 else 0.0
            dd[i + 1] = du[i] - f * du_i
            if i < dim - 2:
                du2[i] = du2_i
                du[i + 1] = -f * du2_i
            dd[i] = dd_i
            du[i] = du_i
            t = x[i]
            x[i] = x[i + 1]
            x[i + 1] = t - f * x[i]
    if dd[dim - 1] == 0.0:
        dd[dim - 1] = _EPS * _EPS
    # back substitution
    x[dim - 1] /= dd[dim - 1]
    if dim > 1:
        x[dim - 2] = (x[dim - 2] - du[dim - 2] * x[dim - 1]) / dd[dim - 2]
    for i in range(dim - 3, -1, -1):
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i]
    return x


@njit(cache=True)
def _resid_norm(d, e, lam, v):
    dim = d.shape[0]
    acc = 0.0
    for i in range(dim):
        r = (d[i] - lam) * v[i]
        if i > 0:
            r += e[i - 1] * v[i - 1]
        if i < dim - 1:
            r += e[i] * v[i + 1]
        acc += r * r
    return np.sqrt(acc)


@njit(cache=True)
def _inverse_iteration(d, e, lam, prev, n_prev, tnorm):
    """Eigenvector at shift lam by inverse iteration, orthogonalized against
    the n_prev already-accepted vectors in prev (rows)."""
    dim = d.shape[0]
    v = np.full(dim, 1.0 / np.sqrt(dim))
    tol = 1e-12 * tnorm if tnorm > 0.0 else 1e-12
    for _ in range(8):
        v = _solve_shifted(d, e, lam, v)
        for p in range(n_prev):
            dot = 0.0
            for i in range(dim):
                dot += prev[p, i] * v[i]
            for i in range(dim):
                v[i] -= dot * prev[p, i]
        nrm = np.sqrt(np.dot(v, v))
        if nrm == 0.0:
            v = np.full(dim, 1.0 / np.sqrt(dim))
            continue
        v /= nrm
        if _resid_norm(d, e, lam, v) <= tol:
            break
    return v


@njit(cache=True)
def _eigvecs_for(d, e, vals, cluster_tol):
    dim = d.shape[0]
    k = vals.shape[0]
    tnorm = 0.0
    for i in range(dim):
        r = abs(d[i])
        if i > 0:
            r += abs(e[i - 1])
        if i < dim - 1:
            r += abs(e[i])
        if r > tnorm:
            tnorm = r
    vecs = np.empty((k, dim))
    for j in range(k):
        # orthogonalize only within a near-degenerate cluster
        first = j
        while first > 0 and vals[j] - vals[first - 1] <= cluster_tol:
            first -= 1
        v = _inverse_iteration(d, e, vals[j], vecs[first:j], j - first, tnorm)
        vecs[j] = v
    return vecs


@njit(cache=True)
def _cn_propagate(d0, e0, dp, T, steps, psi):
    """Crank-Nicolson sweep of i dpsi/dt = H(t/T) psi with the affine schedule
    s = t/T; each step applies the unitary Cayley transform of H frozen at the
    midpoint.  psi is complex128 and is evolved in place."""
    dim = d0.shape[0]
    dt = T / steps
    z = 0.5j * dt
    rhs = np.empty(dim, np.complex128)
    a = np.empty(dim - 1, np.complex128)
    b = np.empty(dim, np.complex128)
    cp = np.empty(dim - 1, np.complex128)
    dv = np.empty(dim, np.complex128)
    for step in range(steps):
        s = (step + 0.5) * dt / T
        # rhs = (I - i dt H / 2) psi
        for i in range(dim):
            h = (1.0 - s) * d0[i] + s * dp[i]
            r = h * psi[i]
            if i > 0:
                r += (1.0 - s) * e0[i - 1] * psi[i - 1]
            if i < dim - 1:
                r += (1.0 - s) * e0[i] * psi[i + 1]
            rhs[i] = psi[i] - z * r
            b[i] = 1.0 + z * h
        for i in range(dim - 1):
            a[i] = z * (1.0 - s) * e0[i]
        # Thomas solve (I + i dt H / 2) psi' = rhs; the matrix is strictly
        # diagonally dominant for dt * max|e| < 2, no pivoting needed
        cp[0] = a[0] / b[0]
        dv[0] = rhs[0] / b[0]
        for i in range(1, dim - 1):
            den = b[i] - a[i - 1] * cp[i - 1]
            cp[i] = a[i] / den
            dv[i] = (rhs[i] - a[i - 1] * dv[i - 1]) / den
        den = b[dim - 1] - a[dim - 2] * cp[dim - 2]
        dv[dim - 1] = (rhs[dim - 1] - a[dim - 2] * dv[dim - 2]) / den
        psi[dim - 1] = dv[dim - 1]
        for i in range(dim - 2, -1, -1):
            psi[i] = dv[i] - cp[i] * psi[i + 1]
    return psi


# ---------------------------------------------------------------------------
# fallback path: scipy LAPACK wrappers
# ---------------------------------------------------------------------------

def _np_eigvals_range(d, e, k_lo, k_hi):
    from scipy.linalg import eigvalsh_tridiagonal

    return eigvalsh_tridiagonal(d, e, select="i", select_range=(k_lo, k_hi))


def _np_eig_range(d, e, k_lo, k_hi):
    from scipy.linalg import eigh_tridiagonal

    vals, vecs = eigh_tridiagonal(d, e, select="i", select_range=(k_lo, k_hi))
    return vals, np.ascontiguousarray(vecs.T)


def _np_cn_propagate(d0, e0, dp, T, steps, psi):
    from scipy.linalg import solve_banded

    dim = d0.shape[0]
    dt = T / steps
    z = 0.5j * dt
    ab = np.zeros((3, dim), np.complex128)
    for step in range(steps):
        s = (step + 0.5) * dt / T
        d = (1.0 - s) * d0 + s * dp
        e = (1.0 - s) * e0
        h_psi = d * psi
        h_psi[:-1] += e * psi[1:]
        h_psi[1:] += e * psi[:-1]
        rhs = psi - z * h_psi
        ab[0, 1:] = z * e
        ab[1, :] = 1.0 + z * d
        ab[2, :-1] = z * e
        psi[:] = solve_banded((1, 1), ab, rhs)
    return psi


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def eigvals_range(d, e, k_lo, k_hi):
    """Eigenvalues k_lo..k_hi (0-based, ascending) of the symmetric tridiagonal
    with diagonal d and off-diagonal e."""
    d = np.ascontiguousarray(d, dtype=np.float64)
    e = np.ascontiguousarray(e, dtype=np.float64)
    if d.shape[0] == 1:
        return d[k_lo : k_hi + 1].copy()
    if NUMBA_ENABLED:
        return _eigvals_bisect(d, e, k_lo, k_hi)
    return _np_eigvals_range(d, e, k_lo, k_hi)


def eig_range(d, e, k_lo, k_hi, cluster_tol=None):
    """Eigenpairs k_lo..k_hi: (values ascending, vectors as rows).  Vectors are
    orthonormalized inside near-degenerate clusters; no sign convention is
    applied here."""
    d = np.ascontiguousarray(d, dtype=np.float64)
    e = np.ascontiguousarray(e, dtype=np.float64)
    if d.shape[0] == 1:
        return d[k_lo : k_hi + 1].copy(), np.ones((k_hi - k_lo + 1, 1))
    if not NUMBA_ENABLED:
        return _np_eig_range(d, e, k_lo, k_hi)
    vals = _eigvals_bisect(d, e, k_lo, k_hi)
    if cluster_tol is None:
        scale = float(np.max(np.abs(d))) + float(np.max(np.abs(e)))
        cluster_tol = 1e-8 * max(scale, 1.0)
    vecs = _eigvecs_for(d, e, vals, cluster_tol)
    return vals, vecs


def cn_propagate(d0, e0, dp, T, steps, psi0):
    """Norm-preserving Crank-Nicolson evolution along the affine schedule.
    Returns the final complex state (new array)."""
    psi = np.ascontiguousarray(psi0, dtype=np.complex128).copy()
    if steps == 0 or T == 0.0:
        return psi
    args = (
        np.ascontiguousarray(d0, dtype=np.float64),
        np.ascontiguousarray(e0, dtype=np.float64),
        np.ascontiguousarray(dp, dtype=np.float64),
        float(T),
        int(steps),
        psi,
    )
    if NUMBA_ENABLED and d0.shape[0] > 1:
        return _cn_propagate(*args)
    if d0.shape[0] == 1:
        # single level: pure phase, modulus untouched
        return psi
    return _np_cn_propagate(*args)
