"""Python bindings for the gzk core library.

Fields are complex numpy arrays of shape (nx, ny) sampled on a Grid,
x being the first index.
"""

from ._gzk import (
    Grid,
    NumericalGuardError,
    ValidationError,
    commutator_check,
    evolve,
    forward,
    frac_deriv,
    hs_norm,
    invariants,
    inverse,
    load_field,
    local_time,
    mu_norms,
    phi_operator,
    picard_solve,
    propagate,
    run_experiment,
    save_field,
    stein_deriv,
    weighted_l2,
    weighted_l2_sum,
)

__all__ = [
    "Grid",
    "NumericalGuardError",
    "ValidationError",
    "commutator_check",
    "evolve",
    "forward",
    "frac_deriv",
    "hs_norm",
    "invariants",
    "inverse",
    "load_field",
    "local_time",
    "mu_norms",
    "phi_operator",
    "picard_solve",
    "propagate",
    "run_experiment",
    "save_field",
    "stein_deriv",
    "weighted_l2",
    "weighted_l2_sum",
]
