import math

import numpy as np
import pytest

from adiabatic_lab import dynamics as dyn
from adiabatic_lab import oracle
from adiabatic_lab.model import ModelParams


class TestQuench:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_t_zero_fidelity_exact(self, n):
        r = dyn.evolve(n, 1.5, 0.0)
        assert r.fidelity == 2.0**-n
        assert r.steps == 0
        assert r.norm_drift < 1e-15

    def test_final_state_is_initial(self):
        r = dyn.evolve(4, 2.0, 0.0)
        np.testing.assert_allclose(
            np.abs(r.final_state) ** 2,
            [math.comb(4, k) / 16.0 for k in range(5)],
            atol=1e-15,
        )


class TestEvolve:
    def test_slow_single_qubit_reaches_ground(self):
        r = dyn.evolve(1, 1.0, 100.0)
        assert r.fidelity > 0.99
        assert r.norm_drift <= 1e-9

    def test_auto_step_halving_contract(self):
        r = dyn.evolve(3, 2.0, 25.0)
        half = dyn.evolve(3, 2.0, 25.0, steps=r.steps // 2)
        assert abs(r.fidelity - half.fidelity) < 1e-6

    def test_norm_preserved_along_runs(self):
        for n, alpha, T in ((2, 0.0, 10.0), (6, 3.0, 40.0), (10, 10.0, 15.0)):
            r = dyn.evolve(n, alpha, T)
            assert r.norm_drift <= 1e-9

    def test_separable_easier_than_projector(self):
        T = 60.0
        easy = dyn.evolve(6, 0.0, T)
        hard = dyn.evolve(6, 10.0, T)
        assert easy.fidelity > hard.fidelity

    def test_adiabatic_trend(self):
        n, alpha = 4, 1.0
        t0 = None
        for T in np.arange(2.0, 200.0, 2.0):
            if dyn.evolve(n, alpha, float(T)).fidelity > 0.5:
                t0 = float(T)
                break
        assert t0 is not None
        assert dyn.evolve(n, alpha, 10.0 * t0).fidelity > dyn.evolve(n, alpha, t0).fidelity

    def test_input_validation(self):
        with pytest.raises(ValueError):
            dyn.evolve(2, 1.0, -1.0)
        with pytest.raises(ValueError):
            dyn.evolve(2, 1.0, math.inf)
        with pytest.raises(ValueError):
            dyn.evolve(2, -0.5, 1.0)
        with pytest.raises(ValueError):
            dyn.evolve(2, 1.0, 5.0, steps=0)


class TestGaugeIndependence:
    def test_fidelity_invariant_under_bit_flips(self):
        # full-space run with a gauged problem vs the sector run, identical
        # Crank-Nicolson discretization
        n, alpha, T, steps = 6, 2.0, 30.0, 3000
        sector = dyn.evolve(n, alpha, T, steps=steps)
        mask = np.array([1, 0, 1, 1, 0, 1])
        h0 = oracle.build_full(ModelParams(n, alpha, 0.0))
        hp = oracle.build_full(ModelParams(n, alpha, 1.0))
        hp_gauged = oracle.apply_gauge(hp, mask)
        dim = 2**n
        psi = np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128)  # U-invariant
        dt = T / steps
        eye = np.eye(dim)
        for step in range(steps):
            s = (step + 0.5) * dt / T
            h = (1.0 - s) * h0 + s * hp_gauged
            rhs = psi - 0.5j * dt * (h @ psi)
            psi = np.linalg.solve(eye + 0.5j * dt * h, rhs)
        marked = int("".join(str(b) for b in mask), 2)
        fid_gauged = float(abs(psi[marked]) ** 2)
        assert abs(fid_gauged - sector.fidelity) < 1e-8
        assert abs(np.linalg.norm(psi) - 1.0) < 1e-9


class TestRequiredTime:
    def test_quench_target_met_immediately(self):
        scan = dyn.required_time_scan([3], 1.0, 2.0**-3 + 1e-4)
        assert scan[0].t_star < 1.0

    def test_reports_gap_correlates(self):
        scan = dyn.required_time_scan([2, 4], 0.0, 0.9)
        for r in scan:
            assert abs(r.min_gap - 1.0 / (math.sqrt(2.0) * r.n)) < 1e-10
            assert r.inv_gap_sq == pytest.approx(1.0 / r.min_gap**2)
        assert scan[0].t_star < scan[1].t_star

    def test_target_validation(self):
        with pytest.raises(ValueError):
            dyn.required_time_scan([2], 1.0, 1.5)
