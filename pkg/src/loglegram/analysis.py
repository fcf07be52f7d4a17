"""Downstream numerics built on the Gram matrix.

Covers bilinear log-weighted forms a' N b, the L2-optimal shifted
Legendre expansion of log(x) on [0, 1], and the diagonal scaling
diagnostics (2n+1) N[n, n], which decrease monotonically toward
-2 log 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import OrderLimitError
from .exactmoments import GramMatrix, diag_sum_term, entry_offdiag
from .legendre import check_order
from .oracles import (
    DEFAULT_NUM_PANELS,
    DEFAULT_QUAD_DEGREE,
    MAX_QUAD_DEGREE,
    _panel_grid,
    dyadic_panels,
    gauss_legendre_rule,
    shifted_legendre_table,
)

#: Ceiling on expansion orders; the error quadrature degree scales with
#: the order and tops out at the rule cap.
MAX_EXPANSION_ORDER = 512

__all__ = [
    "MAX_EXPANSION_ORDER",
    "ExpansionReport",
    "bilinear_log_form",
    "diag_scaling_table",
    "expansion_l2_error",
    "log_expansion_coeffs",
]


@dataclass(frozen=True)
class ExpansionReport:
    """Shifted Legendre expansion of log(x) truncated at ``order``.

    ``l2_error`` is the L2[0, 1] norm of log minus the partial expansion;
    it is nonincreasing in the order.
    """

    order: int
    coefficients: list
    l2_error: float


def bilinear_log_form(a, b, gram: GramMatrix):
    """Evaluate a' N b = integral of f g log over [0, 1].

    ``a`` and ``b`` are coefficient sequences in the shifted Legendre
    basis (index n multiplies P_n(2x-1)); the shorter one is zero-padded.
    The result is exact when both vectors and the matrix are exact;
    any float input promotes the result to float.
    """
    a = list(a)
    b = list(b)
    if not a or not b:
        raise ValueError("coefficient vectors must have length >= 1")
    if gram.nrows < max(len(a), len(b)):
        raise OrderLimitError(
            f"gram matrix of order {gram.order} is too small for coefficient "
            f"vectors of lengths {len(a)} and {len(b)}"
        )
    total = 0
    for n, an in enumerate(a):
        if not an:
            continue
        row = gram.entries[n]
        total += an * sum(bm * row[m] for m, bm in enumerate(b) if bm)
    return total


def log_expansion_coeffs(order: int, *, max_order=None) -> list:
    """L2-optimal coefficients of log(x) in the shifted Legendre basis.

    c_n = (2n+1) N[n, 0] since the basis norm is
    integral of P_n(2x-1)**2 = 1/(2n+1); explicitly c_0 = -1 and
    c_n = (2n+1) (-1)**(n+1) / (n (n+1)) for n >= 1.
    """
    check_order(order, max_order, name="order")
    coeffs = [Fraction(-1)]
    for n in range(1, order + 1):
        coeffs.append((2 * n + 1) * entry_offdiag(n, 0, max_order=max_order))
    return coeffs


def expansion_l2_error(
    order: int,
    *,
    num_panels: int = DEFAULT_NUM_PANELS,
    quad_degree: int | None = None,
) -> ExpansionReport:
    """L2[0, 1] error of the truncated log expansion, by graded quadrature.

    The residual is integrated on the same dyadic mesh the quadrature
    oracle uses, so the panels resolve the log factor; the quadrature
    degree grows with the order so the polynomial part of the squared
    residual stays inside the rule's exactness range (up to the rule
    cap).  Computing the error by quadrature rather than Parseval keeps
    the Parseval identity available as an independent cross-check.
    """
    check_order(order, MAX_EXPANSION_ORDER, name="order")
    if quad_degree is None:
        quad_degree = min(MAX_QUAD_DEGREE, max(DEFAULT_QUAD_DEGREE, order + 8))
    coefficients = log_expansion_coeffs(order, max_order=order)
    coeffs = np.array([float(c) for c in coefficients])
    x, w = _panel_grid(dyadic_panels(num_panels), gauss_legendre_rule(quad_degree))
    partial = coeffs @ shifted_legendre_table(x, order)
    residual = np.log(x) - partial
    err_sq = float(np.dot(w, residual * residual))
    return ExpansionReport(
        order=order, coefficients=coefficients, l2_error=math.sqrt(err_sq)
    )


def diag_scaling_table(max_order: int, *, max_order_cap=None) -> list:
    """Pairs (n, (2n+1) N[n, n]) as floats, for n = 0..max_order.

    The scaled diagonal is the running partial sum
    -1 - 2 sum_{j<=n} 1/((2j-1) 2j (2j+1)): strictly decreasing and
    bounded below by its limit -2 log 2.
    """
    check_order(max_order, max_order_cap, name="max_order")
    out = []
    running = Fraction(-1)
    for n in range(max_order + 1):
        if n >= 1:
            running -= 2 * diag_sum_term(n)
        out.append((n, float(running)))
    return out
