import math

import numpy as np
import pytest

from adiabatic_lab import oracle
from adiabatic_lab.eigensolver import eigen_all, eigen_lowest, ground_pair
from adiabatic_lab.model import ModelParams, SymmetricState, TridiagonalOperator, build_hs


def random_tridiagonal(rng, dim):
    return TridiagonalOperator(rng.standard_normal(dim), rng.standard_normal(dim - 1))


class TestEigenAll:
    def test_scalar(self):
        r = eigen_all(TridiagonalOperator(np.array([3.25]), np.zeros(0)))
        np.testing.assert_array_equal(r.values, [3.25])

    def test_two_by_two_closed_form(self):
        vals = eigen_all(build_hs(ModelParams(1, 2.0, 0.5))).values
        np.testing.assert_allclose(
            vals, [0.5 - math.sqrt(2) / 4, 0.5 + math.sqrt(2) / 4], atol=1e-14
        )

    def test_separable_closed_form(self):
        n, s = 50, 0.3
        vals = eigen_all(build_hs(ModelParams(n, 0.0, s))).values
        step = math.sqrt(s * s + (1 - s) ** 2) / n
        np.testing.assert_allclose(vals, vals[0] + step * np.arange(n + 1), atol=1e-10)

    @pytest.mark.parametrize("dim", [2, 3, 7, 24, 61])
    def test_against_dense_lapack(self, rng, dim):
        t = random_tridiagonal(rng, dim)
        vals = eigen_all(t).values
        ref = np.linalg.eigvalsh(t.to_dense())
        spread = ref[-1] - ref[0]
        np.testing.assert_allclose(vals, ref, atol=1e-12 * spread)

    def test_gershgorin_containment(self, rng):
        for dim in (3, 11, 40):
            t = random_tridiagonal(rng, dim)
            vals = eigen_all(t).values
            radius = np.zeros(dim)
            radius[:-1] += np.abs(t.offdiag)
            radius[1:] += np.abs(t.offdiag)
            lo = np.min(t.diag - radius) - 1e-12
            hi = np.max(t.diag + radius) + 1e-12
            assert np.all((vals >= lo) & (vals <= hi))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            eigen_all(TridiagonalOperator(np.array([1.0, np.nan]), np.array([0.1])))


class TestGroundPair:
    def test_gap_closed_form(self):
        gp = ground_pair(build_hs(ModelParams(1, 3.0, 0.5)))
        assert abs(gp.gap - math.sqrt(2) / 2) < 1e-14

    def test_s0_ground_is_x_polarized(self):
        n = 20
        gp = ground_pair(build_hs(ModelParams(n, 2.0, 0.0)))
        assert abs(gp.e0) < 1e-13
        np.testing.assert_allclose(
            gp.psi0.amp, SymmetricState.x_polarized(n).amp, atol=1e-10
        )

    def test_s1_ground_is_marked_state(self):
        n = 15
        gp = ground_pair(build_hs(ModelParams(n, 3.0, 1.0)))
        assert abs(gp.e0) < 1e-14
        assert abs(gp.psi0.amp[n] - 1.0) < 1e-12
        assert np.max(np.abs(gp.psi0.amp[:n])) < 1e-12

    @pytest.mark.parametrize(
        "n,alpha,s",
        [(8, 1.0, 0.4), (30, 5.0, 0.3), (100, 0.0, 0.5), (160, 5.0, 0.306038)],
    )
    def test_residuals_and_orthonormality(self, n, alpha, s):
        # the (160, 5.0) point sits at an anti-crossing with gap ~ 8e-12
        t = build_hs(ModelParams(n, alpha, s))
        gp = ground_pair(t)
        tnorm = np.max(np.abs(t.diag)) + 2 * np.max(np.abs(t.offdiag))
        for e, psi in ((gp.e0, gp.psi0), (gp.e1, gp.psi1)):
            resid = np.linalg.norm(t.matvec(psi.amp.copy()) - e * psi.amp)
            assert resid <= 1e-10 * tnorm
        assert abs(gp.psi0.amp @ gp.psi1.amp) <= 1e-10
        assert abs(gp.psi0.amp @ gp.psi0.amp - 1.0) <= 1e-10
        assert gp.gap >= 0.0

    def test_deterministic_and_sign_fixed(self):
        t = build_hs(ModelParams(40, 5.0, 0.31))
        a = ground_pair(t)
        b = ground_pair(t)
        assert a.e0 == b.e0 and a.e1 == b.e1
        np.testing.assert_array_equal(a.psi0.amp, b.psi0.amp)
        np.testing.assert_array_equal(a.psi1.amp, b.psi1.amp)
        first0 = a.psi0.amp[np.nonzero(a.psi0.amp)[0][0]]
        first1 = a.psi1.amp[np.nonzero(a.psi1.amp)[0][0]]
        assert first0 > 0.0 and first1 > 0.0

    def test_dim_guard(self):
        with pytest.raises(ValueError):
            ground_pair(TridiagonalOperator(np.array([1.0]), np.zeros(0)))


class TestAgainstOracle:
    @pytest.mark.parametrize("n", [2, 5, 8, 10])
    def test_sector_eigenvalues(self, n):
        for alpha, s in ((0.0, 0.5), (1.5, 0.25), (6.0, 0.8)):
            p = ModelParams(n, alpha, s)
            vals = eigen_all(build_hs(p)).values
            block = oracle.symmetric_sector(oracle.build_full(p), n)
            np.testing.assert_allclose(vals, np.linalg.eigvalsh(block), atol=1e-10)


def test_eigen_lowest_prefix_of_full():
    t = build_hs(ModelParams(25, 2.0, 0.35))
    np.testing.assert_allclose(eigen_lowest(t, 5), eigen_all(t).values[:5], atol=1e-13)
