"""Rough polyharmonic spline bases for rough-coefficient elliptic problems."""

from ._rps import (
    Basis,
    BasisBuilder,
    Discretization,
    RpsError,
    cli,
    coarse_samples,
    coarse_solve,
    condition_number,
    decay_curve,
    fit_rate,
    gram,
    interpolate,
    inverse_residual,
    load_config,
    logarithmic_layers,
    parabolic,
    recover,
    solve_fine,
    theta,
    wave,
)

__all__ = [
    "Basis",
    "BasisBuilder",
    "Discretization",
    "RpsError",
    "cli",
    "coarse_samples",
    "coarse_solve",
    "condition_number",
    "decay_curve",
    "fit_rate",
    "gram",
    "interpolate",
    "inverse_residual",
    "load_config",
    "logarithmic_layers",
    "parabolic",
    "recover",
    "solve_fine",
    "theta",
    "wave",
]
