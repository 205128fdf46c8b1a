"""Numerical laboratory for a two-parameter fully-connected spin model of
adiabatic computation: exact symmetric-sector spectra, minimum-gap scaling,
mean-field phase diagram, ground-state entanglement, and Schrodinger dynamics,
cross-checked against a brute-force full-Hilbert-space oracle at small n."""

__version__ = "0.1.0"

from .model import (
    ModelParams,
    SymmetricState,
    TridiagonalOperator,
    build_h0,
    build_hp,
    build_hs,
    level_energies_s1,
)

__all__ = [
    "__version__",
    "ModelParams",
    "SymmetricState",
    "TridiagonalOperator",
    "build_h0",
    "build_hp",
    "build_hs",
    "level_energies_s1",
]
