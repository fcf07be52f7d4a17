"""Log-weighted Gram matrices of shifted Legendre polynomials.

Computes N[n, m] = integral over [0, 1] of P_n(2x-1) P_m(2x-1) log(x) dx
in exact rational arithmetic from closed forms, and verifies the values
against an independent symbolic oracle (exact) and endpoint-graded
quadrature (floating).
"""

from .analysis import (
    ExpansionReport,
    bilinear_log_form,
    diag_scaling_table,
    expansion_l2_error,
    log_expansion_coeffs,
)
from .errors import ConvergenceError, OrderLimitError
from .exactmoments import (
    GramMatrix,
    diag_sum_term,
    entry,
    entry_diag,
    entry_offdiag,
    gram_exact,
    gram_float,
)
from .legendre import MAX_ORDER, MonomialPoly, coeffs_exact, eval_batch, eval_shifted
from .oracles import (
    PanelDecomposition,
    QuadratureRule,
    VerificationReport,
    dyadic_panels,
    exact_entry_oracle,
    gauss_legendre_rule,
    monomial_log_moment,
    quad_entry_oracle,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "ConvergenceError",
    "ExpansionReport",
    "GramMatrix",
    "MonomialPoly",
    "OrderLimitError",
    "PanelDecomposition",
    "QuadratureRule",
    "VerificationReport",
    "bilinear_log_form",
    "coeffs_exact",
    "diag_scaling_table",
    "diag_sum_term",
    "dyadic_panels",
    "entry",
    "entry_diag",
    "entry_offdiag",
    "eval_batch",
    "eval_shifted",
    "exact_entry_oracle",
    "expansion_l2_error",
    "gauss_legendre_rule",
    "gram_exact",
    "gram_float",
    "log_expansion_coeffs",
    "monomial_log_moment",
    "quad_entry_oracle",
    "verify_range",
]
