import math

import numpy as np
import pytest

from adiabatic_lab import observables as obs
from adiabatic_lab import oracle
from adiabatic_lab.eigensolver import ground_pair
from adiabatic_lab.model import ModelParams, SymmetricState, TridiagonalOperator, build_hs
from adiabatic_lab.model import ladder_coefficients

from conftest import random_symmetric_state


def product_state(n: int, theta: float) -> SymmetricState:
    """Real uniform product state expanded over the Dicke basis."""
    k = np.arange(n + 1)
    logc = np.array(
        [math.lgamma(n + 1) - math.lgamma(i + 1) - math.lgamma(n - i + 1) for i in k]
    )
    amp = np.exp(
        0.5 * logc
        + k * math.log(max(math.cos(theta / 2.0), 1e-300))
        + (n - k) * math.log(max(math.sin(theta / 2.0), 1e-300))
    )
    amp /= np.linalg.norm(amp)
    amp /= np.sqrt(amp @ amp)
    return SymmetricState(n, amp)


def sector_operator(n: int, full: np.ndarray) -> np.ndarray:
    p = oracle.dicke_projector(n)
    return (p @ full @ p.conj().T).real


class TestSpinExpectations:
    def test_sx_polarized(self):
        n = 14
        assert abs(obs.expect_sx(SymmetricState.x_polarized(n)) - n / 2) < 1e-12
        assert abs(obs.expect_sx(SymmetricState.z_polarized(n))) < 1e-15

    def test_sx_separable_ground(self):
        gp = ground_pair(build_hs(ModelParams(4, 0.0, 0.5)))
        expected = 2.0 * (0.5 / math.sqrt(0.5))  # (n/2)(1-s)/sqrt(s^2+(1-s)^2)
        assert abs(obs.expect_sx(gp.psi0) - expected) < 1e-12
        assert abs(expected - math.sqrt(2.0)) < 1e-15

    def test_sy2_product_states(self):
        n = 11
        assert abs(obs.expect_sy2(SymmetricState.x_polarized(n)) - n / 4) < 1e-12
        assert abs(obs.expect_sy2(SymmetricState.z_polarized(n)) - n / 4) < 1e-12

    def test_sy2_triplet_matrix_element(self):
        state = SymmetricState(2, np.array([0.0, 1.0, 0.0]))
        sy = oracle.collective_spin(2, "y")
        ref = sector_operator(2, (sy @ sy).real)[1, 1]
        assert abs(obs.expect_sy2(state) - ref) < 1e-12
        assert abs(obs.expect_sy2(state) - 1.0) < 1e-12

    @pytest.mark.parametrize("n", [2, 5, 10])
    def test_sy2_matches_dense_oracle(self, rng, n):
        sy2 = sector_operator(n, (oracle.collective_spin(n, "y") @ oracle.collective_spin(n, "y")).real)
        for _ in range(5):
            psi = random_symmetric_state(rng, n)
            ref = float(psi.amp @ (sy2 @ psi.amp))
            assert abs(obs.expect_sy2(psi) - ref) < 1e-10

    @pytest.mark.parametrize("n", [2, 3, 8])
    def test_sx_sz_match_dense_oracle(self, rng, n):
        sx = sector_operator(n, oracle.collective_spin(n, "x"))
        sz = sector_operator(n, oracle.collective_spin(n, "z"))
        for _ in range(3):
            psi = random_symmetric_state(rng, n)
            assert abs(obs.expect_sx(psi) - psi.amp @ (sx @ psi.amp)) < 1e-10
            assert abs(obs.expect_sz(psi) - psi.amp @ (sz @ psi.amp)) < 1e-10

    def test_sum_rule(self, rng):
        for _ in range(30):
            n = int(rng.integers(1, 60))
            psi = random_symmetric_state(rng, n)
            total = obs.expect_sx2(psi) + obs.expect_sy2(psi) + obs.expect_sz2(psi)
            j = n / 2.0
            assert abs(total - j * (j + 1.0)) < 1e-10


class TestConcurrence:
    def test_zero_on_polarized_states(self):
        for n in (2, 7, 20):
            assert abs(obs.rescaled_concurrence(SymmetricState.x_polarized(n))) < 1e-10
            assert abs(obs.rescaled_concurrence(SymmetricState.z_polarized(n))) < 1e-10

    def test_zero_on_random_product_states(self, rng):
        for _ in range(10):
            n = int(rng.integers(2, 40))
            theta = float(rng.uniform(0.05, math.pi - 0.05))
            assert abs(obs.rescaled_concurrence(product_state(n, theta))) < 1e-10

    def test_wootters_bell_state(self):
        bell = SymmetricState(2, np.array([1.0, 0.0, 1.0]) / math.sqrt(2.0))
        assert abs(obs.wootters_oracle(bell) - 1.0) < 1e-12

    def test_wootters_product_states(self, rng):
        for n in (2, 5, 9):
            theta = float(rng.uniform(0.1, math.pi - 0.1))
            assert obs.wootters_oracle(product_state(n, theta)) < 1e-10

    def test_wootters_guard(self):
        with pytest.raises(ValueError):
            obs.wootters_oracle(SymmetricState.x_polarized(13))

    @pytest.mark.parametrize("n", [2, 4, 7, 10])
    def test_formula_matches_wootters_on_path_ground_states(self, n):
        for alpha, s in ((0.5, 0.7), (1.0, 0.5), (3.0, 0.3), (5.0, 0.2), (5.0, 0.35)):
            gp = ground_pair(build_hs(ModelParams(n, alpha, s)))
            formula = obs.rescaled_concurrence(gp.psi0)
            if formula >= 0.0:
                assert abs(formula - obs.wootters_oracle(gp.psi0)) < 1e-8

    def test_one_excitation_dicke_state_goes_negative(self):
        # known failure domain of the closed formula: the true concurrence is
        # positive here, the formula is not; values are reported raw
        n = 8
        amp = np.zeros(n + 1)
        amp[n - 1] = 1.0
        state = SymmetricState(n, amp)
        assert obs.rescaled_concurrence(state) < 0.0
        assert obs.wootters_oracle(state) > 0.0

    def test_jump_across_transition_grows_with_alpha(self):
        n = 400
        ss = np.linspace(0.25, 0.40, 61)
        jumps = {}
        for alpha in (1.0, 3.0, 5.0):
            vals = [
                obs.rescaled_concurrence(
                    ground_pair(build_hs(ModelParams(n, alpha, float(s)))).psi0
                )
                for s in ss
            ]
            jumps[alpha] = float(np.max(np.abs(np.diff(vals))))
        assert jumps[1.0] < 0.02
        assert jumps[1.0] < jumps[3.0] < jumps[5.0]


class TestAnatomy:
    def test_x_polarized(self):
        n = 12
        a = obs.anatomy(SymmetricState.x_polarized(n))
        assert abs(a.overlap_x - 1.0) < 1e-12
        assert abs(a.overlap_z - 2.0**-n) < 1e-15
        assert abs(a.dicke_weights.sum() - 1.0) < 1e-12
        assert a.overlap_z == a.dicke_weights[n]

    def test_weights_sum_to_one(self, rng):
        for _ in range(5):
            n = int(rng.integers(1, 50))
            a = obs.anatomy(random_symmetric_state(rng, n))
            assert abs(a.dicke_weights.sum() - 1.0) < 1e-12

    def test_first_excited_is_one_excitation_x_state_before_cascade(self):
        n, alpha, s = 50, 5.0, 0.1
        gp = ground_pair(build_hs(ModelParams(n, alpha, s)))
        # top two eigenvectors of S_x = lowest two of -S_x
        t = ladder_coefficients(n)
        flipped = TridiagonalOperator(np.zeros(n + 1), -t)
        x_pair = ground_pair(flipped)
        overlap = abs(float(x_pair.psi1.amp @ gp.psi1.amp))
        assert overlap**2 > 0.99
        assert obs.anatomy(gp.psi0).overlap_x > 0.99
