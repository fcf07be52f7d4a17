"""Closed-form values of the log-weighted Legendre Gram matrix.

The target quantities are

    N[n, m] = integral over [0, 1] of P_n(2x-1) P_m(2x-1) log(x) dx.

Off the diagonal the value is (-1)**(n+m+1) / (|n-m| (n+m+1)); on the
diagonal, (2n+1) N[n, n] = -1 - 2 * sum_{j=1..n} 1/((2j-1) 2j (2j+1)).
Both are evaluated in exact rational arithmetic; the floating variants
are correctly rounded from the exact values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .legendre import check_order

__all__ = [
    "GramMatrix",
    "diag_sum_term",
    "entry",
    "entry_diag",
    "entry_offdiag",
    "gram_exact",
    "gram_float",
]


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric (order+1) x (order+1) table of N[n, m] values.

    ``mode`` is "exact" (Fraction entries) or "float" (correctly rounded
    doubles).  Diagonal entries are strictly negative, off-diagonal signs
    alternate as (-1)**(n+m+1), and |N[n, m]| <= 1 with equality only at
    (0, 0).
    """

    order: int
    mode: str
    entries: list

    @property
    def nrows(self) -> int:
        return self.order + 1

    def at(self, n: int, m: int):
        return self.entries[n][m]


def diag_sum_term(j: int) -> Fraction:
    """Summand 1/((2j-1) * 2j * (2j+1)) of the diagonal closed sum, j >= 1."""
    if not isinstance(j, int) or isinstance(j, bool) or j < 1:
        raise ValueError(f"summation index must be a positive integer, got {j!r}")
    return Fraction(1, (2 * j - 1) * 2 * j * (2 * j + 1))


def entry_offdiag(n: int, m: int, *, max_order=None) -> Fraction:
    """N[n, m] for n != m: (-1)**(n+m+1) / (|n-m| (n+m+1)), reduced."""
    check_order(n, max_order, name="n")
    check_order(m, max_order, name="m")
    if n == m:
        raise ValueError(
            f"entry_offdiag is undefined on the diagonal (n = m = {n}); use entry_diag"
        )
    sign = 1 if (n + m) % 2 else -1
    return Fraction(sign, abs(n - m) * (n + m + 1))


def entry_diag(n: int, *, max_order=None) -> Fraction:
    """N[n, n] by fresh summation of the closed sum, as a reduced fraction."""
    check_order(n, max_order, name="n")
    scaled = Fraction(-1) - 2 * sum(
        (diag_sum_term(j) for j in range(1, n + 1)), Fraction(0)
    )
    return scaled / (2 * n + 1)


def entry(n: int, m: int, *, max_order=None) -> Fraction:
    """N[n, m] for any index pair.

    Dispatches to the diagonal closed sum when n = m (where the
    off-diagonal formula would divide by zero) and to the off-diagonal
    closed form otherwise; N[n, m] = N[m, n] makes the order of the
    arguments immaterial.
    """
    if n == m:
        return entry_diag(n, max_order=max_order)
    return entry_offdiag(n, m, max_order=max_order)


def gram_exact(size: int, *, max_order=None) -> GramMatrix:
    """Exact (size+1) x (size+1) Gram matrix with entries N[n, m].

    The diagonal reuses an incrementally maintained partial sum, O(1)
    extra work per row; a test pins this against fresh ``entry_diag``
    summation.
    """
    check_order(size, max_order, name="size")
    rows = [[Fraction(0)] * (size + 1) for _ in range(size + 1)]
    running = Fraction(-1)  # (2n+1) N[n, n] for the current n
    for n in range(size + 1):
        if n >= 1:
            running -= 2 * diag_sum_term(n)
        rows[n][n] = running / (2 * n + 1)
        for m in range(n):
            value = entry_offdiag(n, m, max_order=max_order)
            rows[n][m] = value
            rows[m][n] = value
    return GramMatrix(order=size, mode="exact", entries=rows)


def gram_float(size: int, *, max_order=None) -> GramMatrix:
    """Floating Gram matrix, each entry correctly rounded from the exact value.

    float(Fraction) divides the arbitrary-precision numerator by the
    denominator with correct rounding, so the result is deterministic
    and platform independent.
    """
    exact = gram_exact(size, max_order=max_order)
    rows = [[float(v) for v in row] for row in exact.entries]
    return GramMatrix(order=size, mode="float", entries=rows)
