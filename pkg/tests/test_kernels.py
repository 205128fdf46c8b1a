"""Parity between the numba kernels and the scipy fallback path."""

import os
import subprocess
import sys

import numpy as np
import pytest

from adiabatic_lab import _kernels
from adiabatic_lab.model import ModelParams, build_h0, build_hp, build_hs


def _problem(n=40, alpha=3.0, s=0.35):
    t = build_hs(ModelParams(n, alpha, s))
    return t.diag, t.offdiag


def test_eigvals_range_matches_fallback(rng):
    for dim in (2, 9, 33, 120):
        d = rng.standard_normal(dim)
        e = rng.standard_normal(dim - 1)
        a = _kernels.eigvals_range(d, e, 0, dim - 1)
        b = _kernels._np_eigvals_range(d, e, 0, dim - 1)
        spread = b[-1] - b[0]
        np.testing.assert_allclose(a, b, atol=1e-13 * max(spread, 1.0))


def test_eig_range_vectors_match_fallback():
    d, e = _problem()
    va, xa = _kernels.eig_range(d, e, 0, 1)
    vb, xb = _kernels._np_eig_range(d, e, 0, 1)
    np.testing.assert_allclose(va, vb, atol=1e-13)
    for row_a, row_b in zip(xa, xb):
        sign = 1.0 if row_a @ row_b >= 0 else -1.0
        np.testing.assert_allclose(row_a, sign * row_b, atol=1e-8)


def test_cn_propagate_matches_fallback():
    n = 12
    h0 = build_h0(n)
    hp = build_hp(n, 2.0)
    psi0 = np.full(n + 1, 1.0 / np.sqrt(n + 1.0), dtype=np.complex128)
    a = _kernels.cn_propagate(h0.diag, h0.offdiag, hp.diag, 7.0, 400, psi0)
    b = _kernels._np_cn_propagate(
        h0.diag.copy(), h0.offdiag.copy(), hp.diag.copy(), 7.0, 400, psi0.copy()
    )
    np.testing.assert_allclose(a, b, atol=1e-12)


def test_cn_propagate_zero_steps_is_identity():
    n = 5
    h0 = build_h0(n)
    hp = build_hp(n, 1.0)
    psi0 = np.zeros(n + 1, dtype=np.complex128)
    psi0[0] = 1.0
    out = _kernels.cn_propagate(h0.diag, h0.offdiag, hp.diag, 0.0, 0, psi0)
    np.testing.assert_array_equal(out, psi0)


@pytest.mark.skipif(not _kernels.NUMBA_ENABLED, reason="numba backend not active")
def test_env_flag_selects_fallback():
    env = dict(os.environ, ADIABATIC_LAB_NO_NUMBA="1")
    code = "from adiabatic_lab import _kernels; print(_kernels.NUMBA_ENABLED)"
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "False"


@pytest.mark.skipif(not _kernels.NUMBA_ENABLED, reason="numba backend not active")
def test_solver_contract_holds_in_fallback_mode():
    env = dict(os.environ, ADIABATIC_LAB_NO_NUMBA="1")
    code = """
import numpy as np
from adiabatic_lab.model import ModelParams, build_hs
from adiabatic_lab.eigensolver import ground_pair
t = build_hs(ModelParams(60, 5.0, 0.31))
gp = ground_pair(t)
resid = np.linalg.norm(t.matvec(gp.psi0.amp.copy()) - gp.e0 * gp.psi0.amp)
assert resid < 1e-10, resid
assert abs(gp.psi0.amp @ gp.psi1.amp) < 1e-10
print("ok")
"""
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "ok", out.stderr
