"""Quantum transmission through equally spaced Dirac delta potentials.

Thin package wrapper around the compiled core: transfer-matrix machinery,
the exact bivariate closed form for the principal matrix element, closed
transmission formulas, k-sweeps, resonance search, and the independent
boundary-condition verification path.
"""

from ._core import (
    BivariatePolynomial,
    IdentityReport,
    PhysicalParams,
    ResonanceRecord,
    SweepRecord,
    TransferMatrix,
    alpha_beta,
    energy_parameter,
    find_resonances,
    format_polynomial,
    matrix_power,
    omega,
    omega4_re_im,
    phase_factor,
    polynomial_identity_check,
    principal_element,
    scattering_from_matrix,
    single_barrier_matrix,
    submultinomial,
    sweep,
    transmission_closed,
    transmission_direct,
    transmission_double,
    transmission_quad,
    transmission_single,
    triangle_coefficient,
    triangle_rows,
)

__all__ = [
    "BivariatePolynomial",
    "IdentityReport",
    "PhysicalParams",
    "ResonanceRecord",
    "SweepRecord",
    "TransferMatrix",
    "alpha_beta",
    "energy_parameter",
    "find_resonances",
    "format_polynomial",
    "matrix_power",
    "omega",
    "omega4_re_im",
    "phase_factor",
    "polynomial_identity_check",
    "principal_element",
    "scattering_from_matrix",
    "single_barrier_matrix",
    "submultinomial",
    "sweep",
    "transmission_closed",
    "transmission_direct",
    "transmission_double",
    "transmission_quad",
    "transmission_single",
    "triangle_coefficient",
    "triangle_rows",
]

__version__ = "0.1.0"
