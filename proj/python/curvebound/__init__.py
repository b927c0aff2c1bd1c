"""Concave heat-semigroup bound profile and its consequences.

Thin Python surface over the C++ core: profile evaluation, roots and
convergence envelopes, the gradient profile and its convex conjugate,
Harnack exponents, classical-bound comparisons, and the radial PDE
verification scenarios.
"""

from curvebound._core import (
    bound_classical_liyau,
    coth_kernel,
    coth_kernel_deriv,
    dominance_report,
    gradient_decay_bound,
    harnack_exponent,
    heat_kernel_ratio_bound,
    legendre,
    li_xu_harnack_exponent,
    linearized_bound_hyperbolic,
    linearized_bound_trigonometric,
    liyau_rhs,
    phi,
    phi_domain_limit,
    phi_large_time_limit,
    phi_prime,
    phi_tilde,
    positive_root_at_most_one,
    psi,
    psi_domain,
    psi_prime,
    psi_prime_inverse,
    root_enclosures,
    roots,
    run_scenario,
    sinhc_kernel,
    ultracontractive_envelope,
)

__all__ = [
    "bound_classical_liyau",
    "coth_kernel",
    "coth_kernel_deriv",
    "dominance_report",
    "gradient_decay_bound",
    "harnack_exponent",
    "heat_kernel_ratio_bound",
    "legendre",
    "li_xu_harnack_exponent",
    "linearized_bound_hyperbolic",
    "linearized_bound_trigonometric",
    "liyau_rhs",
    "phi",
    "phi_domain_limit",
    "phi_large_time_limit",
    "phi_prime",
    "phi_tilde",
    "positive_root_at_most_one",
    "psi",
    "psi_domain",
    "psi_prime",
    "psi_prime_inverse",
    "root_enclosures",
    "roots",
    "run_scenario",
    "sinhc_kernel",
    "ultracontractive_envelope",
]

__version__ = "0.1.0"
