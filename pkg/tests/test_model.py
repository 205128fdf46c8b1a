import math

import numpy as np
import pytest

from adiabatic_lab.eigensolver import eigen_all
from adiabatic_lab.model import (
    ModelParams,
    SymmetricState,
    build_h0,
    build_hp,
    build_hs,
    level_energies_s1,
)

SQ2 = math.sqrt(2.0)


class TestBuildH0:
    def test_n1(self):
        t = build_h0(1)
        np.testing.assert_allclose(t.diag, [0.5, 0.5])
        np.testing.assert_allclose(t.offdiag, [-0.5])

    def test_n2_ladder(self):
        t = build_h0(2)
        np.testing.assert_allclose(t.diag, [0.5, 0.5, 0.5])
        np.testing.assert_allclose(t.offdiag, [-SQ2 / 4.0, -SQ2 / 4.0])

    @pytest.mark.parametrize("n", [1, 2, 5, 17, 64])
    def test_spectrum_endpoints(self, n):
        vals = eigen_all(build_h0(n)).values
        assert abs(vals[0]) < 1e-13
        assert abs(vals[-1] - 1.0) < 1e-13

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            build_h0(0)
        with pytest.raises(ValueError):
            build_h0(-3)


class TestBuildHp:
    def test_n1_finite_alpha(self):
        for alpha in (0.3, 1.0, 7.0):
            t = build_hp(1, alpha)
            np.testing.assert_allclose(t.diag, [1.0, 0.0], atol=1e-15)
            assert np.all(t.offdiag == 0.0)

    def test_projector_limit(self):
        t = build_hp(6, math.inf)
        np.testing.assert_array_equal(t.diag, [1, 1, 1, 1, 1, 1, 0])

    def test_alpha_zero_limit(self):
        t = build_hp(4, 0.0)
        np.testing.assert_allclose(t.diag, [1.0, 0.75, 0.5, 0.25, 0.0], atol=1e-15)

    def test_ground_exactly_zero_at_last_index(self):
        for alpha in (0.0, 0.5, 3.0, math.inf):
            t = build_hp(9, alpha)
            assert t.diag[-1] == 0.0

    def test_monotone_decreasing_for_positive_alpha(self):
        for alpha in (0.2, 1.0, 10.0):
            t = build_hp(30, alpha)
            assert np.all(np.diff(t.diag) < 0.0)
        # huge alpha saturates the upper levels to 1.0 in floats; the ordering
        # survives as non-increasing with the unique minimum still at k = n
        t = build_hp(30, 500.0)
        assert np.all(np.diff(t.diag) <= 0.0)
        assert t.diag[-1] == 0.0 and np.all(t.diag[:-1] > 0.0)

    def test_large_alpha_no_overflow(self):
        t = build_hp(50, 800.0)
        assert np.all(np.isfinite(t.diag))
        assert np.all((t.diag >= 0.0) & (t.diag <= 1.0))

    def test_rejects_negative_alpha(self):
        with pytest.raises(ValueError):
            build_hp(3, -0.1)


class TestBuildHs:
    def test_endpoints_match_constituents(self):
        n, alpha = 7, 2.5
        h0 = build_h0(n)
        hp = build_hp(n, alpha)
        t0 = build_hs(ModelParams(n, alpha, 0.0))
        t1 = build_hs(ModelParams(n, alpha, 1.0))
        np.testing.assert_array_equal(t0.diag, h0.diag)
        np.testing.assert_array_equal(t0.offdiag, h0.offdiag)
        np.testing.assert_array_equal(t1.diag, hp.diag)
        np.testing.assert_array_equal(t1.offdiag, hp.offdiag)

    def test_n1_halfway(self):
        t = build_hs(ModelParams(1, 4.0, 0.5))
        np.testing.assert_allclose(t.diag, [0.75, 0.25])
        np.testing.assert_allclose(t.offdiag, [-0.25])

    @pytest.mark.parametrize("alpha", [0.0, 0.7, 3.0, math.inf])
    @pytest.mark.parametrize("s", [0.0, 0.31, 0.78, 1.0])
    def test_spectrum_bounded(self, alpha, s):
        vals = eigen_all(build_hs(ModelParams(12, alpha, s))).values
        assert vals[0] >= -1e-12
        assert vals[-1] <= 1.0 + 1e-12

    @pytest.mark.parametrize("n,s", [(50, 0.3), (200, 0.7)])
    def test_separable_limit_equally_spaced(self, n, s):
        vals = eigen_all(build_hs(ModelParams(n, 0.0, s))).values
        step = math.sqrt(s * s + (1.0 - s) ** 2) / n
        expected = vals[0] + step * np.arange(n + 1)
        np.testing.assert_allclose(vals, expected, atol=1e-10)

    def test_params_validation(self):
        with pytest.raises(ValueError):
            ModelParams(0, 1.0, 0.5)
        with pytest.raises(ValueError):
            ModelParams(3, -1.0, 0.5)
        with pytest.raises(ValueError):
            ModelParams(3, 1.0, 1.5)
        ModelParams(3, math.inf, 1.0)  # projector limit allowed


class TestLevelEnergiesS1:
    def test_ground_level(self):
        omega, deg = level_energies_s1(8, 2.0)
        assert omega[0] == 0.0
        assert deg[0] == 1.0

    def test_projector_limit(self):
        omega, _ = level_energies_s1(8, math.inf)
        np.testing.assert_array_equal(omega[1:], np.ones(8))

    def test_alpha_zero(self):
        omega, _ = level_energies_s1(10, 0.0)
        np.testing.assert_allclose(omega, np.arange(11) / 10.0, atol=1e-15)

    def test_binomial_degeneracies(self):
        n = 12
        _, deg = level_energies_s1(n, 1.3)
        assert [int(d) for d in deg] == [math.comb(n, q) for q in range(n + 1)]
        assert int(deg.sum()) == 2**n

    def test_rejects_negative_alpha(self):
        with pytest.raises(ValueError):
            level_energies_s1(4, -2.0)


class TestSymmetricState:
    def test_norm_validation(self):
        with pytest.raises(ValueError):
            SymmetricState(2, np.array([1.0, 1.0, 0.0]))

    def test_polarized_states(self):
        n = 9
        x = SymmetricState.x_polarized(n)
        z = SymmetricState.z_polarized(n)
        assert abs(x.amp @ x.amp - 1.0) < 1e-14
        assert z.amp[n] == 1.0
        np.testing.assert_allclose(
            x.amp**2,
            [math.comb(n, k) / 2.0**n for k in range(n + 1)],
            atol=1e-15,
        )

    def test_amplitudes_read_only(self):
        x = SymmetricState.x_polarized(4)
        with pytest.raises(ValueError):
            x.amp[0] = 2.0
