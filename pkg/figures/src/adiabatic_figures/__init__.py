"""Deterministic figure rendering for the adiabatic-lab sweep CSV files.

This package consumes only the documented CSV/JSON interchange format; it
never imports the simulation package."""

__version__ = "0.1.0"
