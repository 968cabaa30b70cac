"""Best constants of dilation-invariant Rellich inequalities."""

from ._rellich import (
    ConvergenceError,
    DegenerateDenominator,
    InvalidArgument,
    Params,
    SolverError,
    alpha_star_bound,
    classify,
    critical_constant,
    delta_rad,
    derive,
    minimize_mode,
    mode_value,
    phi,
    scaled_family_value,
    scan,
    spectrum,
    transform_check,
    verify,
    witness,
)

__all__ = [
    "ConvergenceError",
    "DegenerateDenominator",
    "InvalidArgument",
    "Params",
    "SolverError",
    "alpha_star_bound",
    "classify",
    "critical_constant",
    "delta_rad",
    "derive",
    "minimize_mode",
    "mode_value",
    "phi",
    "scaled_family_value",
    "scan",
    "spectrum",
    "transform_check",
    "verify",
    "witness",
]
