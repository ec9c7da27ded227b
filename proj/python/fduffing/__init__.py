"""Fractional Duffing oscillator solvers (GL explicit scheme and ABM predictor-corrector)."""

from ._core import (
    ForcingSpec,
    GridSpec,
    OrderFunction,
    OscillatorParams,
    Trajectory,
    abm_solve,
    abm_weights,
    accuracy_sequence,
    classical_order_sequence,
    convergence_study,
    efds_solve,
    exact_cubic,
    gamma,
    gl_coefficients,
    limit_cycle_problem,
    manufactured_forcing,
    manufactured_problem,
    max_error,
)

__all__ = [
    "ForcingSpec",
    "GridSpec",
    "OrderFunction",
    "OscillatorParams",
    "Trajectory",
    "abm_solve",
    "abm_weights",
    "accuracy_sequence",
    "classical_order_sequence",
    "convergence_study",
    "efds_solve",
    "exact_cubic",
    "gamma",
    "gl_coefficients",
    "limit_cycle_problem",
    "manufactured_forcing",
    "manufactured_problem",
    "max_error",
]
