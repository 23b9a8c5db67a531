"""Monotone Riemannian metrics on density matrices."""

from ._core import (
    Kind,
    MonometricError,
    alpha_entropy,
    alpha_metric_hessian,
    apply_channel,
    bloch_crosscheck,
    catalog,
    check_contraction,
    classical_relative_entropy,
    commutator_form,
    commutator_ratio_constant,
    decompose_tangent,
    density_from_stokes,
    entropy_hessian,
    fisher_form,
    fubini_study,
    geodesic_distance,
    hellinger,
    horizontal_lift,
    lifted_inner,
    line_element,
    mc_function_from_pair,
    metric_km_quadrature,
    metric_rld,
    metric_sld,
    metric_value,
    pinching,
    radial_coefficient,
    radial_extension_limit,
    random_channel,
    random_density,
    random_tangent,
    random_unitary,
    relative_entropy,
    run_fuzz,
    solve_lyapunov,
    tangential_coefficient,
    tangential_limit,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
