import numpy as np
import pytest

from adiabatic_lab.model import SymmetricState


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_symmetric_state(rng, n: int) -> SymmetricState:
    a = rng.standard_normal(n + 1)
    a /= np.linalg.norm(a)
    # renormalize once more so the constructor's 1e-12 check cannot trip
    a /= np.sqrt(a @ a)
    return SymmetricState(n, a)
