"""Shifted Legendre polynomials on [0, 1].

P_n(2x-1) is the classical Legendre polynomial composed with the affine
map that sends [0, 1] onto [-1, 1].  Everything here runs on the
three-term recurrence

    (k+1) P_{k+1}(t) = (2k+1) t P_k(t) - k P_{k-1}(t),    P_0 = 1, P_1 = t,

either on scalar values (floating evaluation) or on exact integer
coefficient vectors in the monomial basis of x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderLimitError

#: Default ceiling on polynomial orders accepted by public entry points.
#: Coefficient vectors grow like 4**n, so the ceiling keeps misuse from
#: turning into an accidental memory grab; callers may override per call.
MAX_ORDER = 256

__all__ = [
    "MAX_ORDER",
    "MonomialPoly",
    "check_order",
    "coeffs_exact",
    "eval_batch",
    "eval_shifted",
]


def check_order(n, max_order=None, *, name="order"):
    """Validate a polynomial order against the configured ceiling.

    Raises ValueError for non-integer or negative input and
    OrderLimitError when the order exceeds ``max_order`` (defaulting to
    the module-level MAX_ORDER).
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValueError(f"{name} must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")
    cap = MAX_ORDER if max_order is None else max_order
    if n > cap:
        raise OrderLimitError(f"{name} {n} exceeds the configured maximum {cap}")
    return n


@dataclass(frozen=True)
class MonomialPoly:
    """Exact monomial-basis coefficients of P_n(2x-1) on [0, 1].

    ``coeffs[k]`` is the integer coefficient of x**k; the length is
    degree + 1.  Since P_n(1) = 1 and P_n(-1) = (-1)**n, the coefficients
    always sum to 1 and the constant term is (-1)**degree.
    """

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, x):
        """Evaluate by Horner's scheme; exact when ``x`` is exact."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def eval_shifted(n, x, *, max_order=None):
    """Evaluate P_n(2x-1) by the forward three-term recurrence.

    Works with float, Fraction or any numeric type supporting ring
    arithmetic plus true division; exact input gives an exact result.
    Arguments outside [0, 1] are allowed (the recurrence does not care),
    but |result| <= 1 is only guaranteed on [0, 1].
    """
    check_order(n, max_order)
    t = 2 * x - 1
    if n == 0:
        return x * 0 + 1
    p_prev = x * 0 + 1
    p_cur = t
    for k in range(1, n):
        p_prev, p_cur = p_cur, ((2 * k + 1) * t * p_cur - k * p_prev) / (k + 1)
    return p_cur


def eval_batch(n_max, x, *, max_order=None):
    """Return [P_0(2x-1), ..., P_{n_max}(2x-1)] in one recurrence sweep.

    Element n is bit-for-bit identical to ``eval_shifted(n, x)`` because
    both run the same arithmetic in the same order.
    """
    check_order(n_max, max_order)
    t = 2 * x - 1
    out = [x * 0 + 1]
    if n_max == 0:
        return out
    out.append(t)
    for k in range(1, n_max):
        out.append(((2 * k + 1) * t * out[k] - k * out[k - 1]) / (k + 1))
    return out


def coeffs_exact(n, *, max_order=None) -> MonomialPoly:
    """Exact integer monomial coefficients of P_n(2x-1).

    Runs the recurrence on coefficient vectors with t = 2x-1.  The
    division by k+1 is exact over the integers (shifted Legendre
    polynomials have integer coefficients, leading term binomial(2n, n)),
    which the divmod below asserts.
    """
    check_order(n, max_order)
    if n == 0:
        return MonomialPoly((1,))
    prev = [1]
    cur = [-1, 2]
    for k in range(1, n):
        # (2x - 1) * cur, as a coefficient vector one slot longer
        shifted = [0] * (len(cur) + 1)
        for i, c in enumerate(cur):
            shifted[i + 1] += 2 * c
            shifted[i] -= c
        nxt = []
        for i, s in enumerate(shifted):
            num = (2 * k + 1) * s - (k * prev[i] if i < len(prev) else 0)
            q, r = divmod(num, k + 1)
            if r:
                raise AssertionError(f"non-integer coefficient at order {k + 1}")
            nxt.append(q)
        prev, cur = cur, nxt
    return MonomialPoly(tuple(cur))
