"""Independent ground-truth computations of the log-weighted Gram entries.

Two oracles, sharing no formula with :mod:`loglegram.exactmoments`:

* an exact symbolic one: expand P_n(2x-1) P_m(2x-1) in the monomial
  basis with integer coefficients and integrate term by term against
  the log moments  integral x**k log(x) dx on [0, 1]  =  -1/(k+1)**2;

* a floating one: panel-by-panel Gauss-Legendre quadrature on a dyadic
  mesh graded toward the logarithmic singularity at x = 0.  On each
  panel [b/2, b] the integrand is analytic with uniformly bounded
  derivatives after rescaling, so the fixed-degree rule converges
  geometrically; the tail [0, 2**-num_panels] is dropped, which costs
  at most eps * (1 + |log eps|) <= 1e-16 at the default truncation.

``verify_range`` compares the closed forms from ``exactmoments``
against either oracle and reports per-pair results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ConvergenceError
from .legendre import MAX_ORDER, check_order, coeffs_exact

__all__ = [
    "DEFAULT_NUM_PANELS",
    "DEFAULT_QUAD_DEGREE",
    "EXACT_ORACLE_MAX_ORDER",
    "MAX_QUAD_DEGREE",
    "QUAD_ABS_TOL",
    "QUAD_REL_TOL",
    "VERIFY_EXACT_MAX_ORDER",
    "PairCheck",
    "PanelDecomposition",
    "QuadratureRule",
    "VerificationReport",
    "dyadic_panels",
    "exact_entry_oracle",
    "gauss_legendre_rule",
    "monomial_log_moment",
    "quad_entry_oracle",
    "shifted_legendre_table",
    "verify_range",
]

#: Cap on the exact oracle; product coefficients reach ~16**n scale and
#: the cap keeps a full verification sweep interactive.
EXACT_ORACLE_MAX_ORDER = 64

#: Cap on exact-mode verification sweeps (the acceptance envelope).
VERIFY_EXACT_MAX_ORDER = 40

DEFAULT_NUM_PANELS = 64
DEFAULT_QUAD_DEGREE = 32
MAX_QUAD_DEGREE = 128

#: Quadrature-vs-exact tolerances: relative where the value has scale,
#: absolute once it underflows that scale.
QUAD_REL_TOL = 1e-10
QUAD_ABS_TOL = 1e-13


def monomial_log_moment(k: int) -> Fraction:
    """Exact log moment of x**k on [0, 1]: -1/(k+1)**2 (integration by parts)."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"monomial power must be a nonnegative integer, got {k!r}")
    return Fraction(-1, (k + 1) ** 2)


def exact_entry_oracle(n: int, m: int) -> Fraction:
    """N[n, m] by exact monomial expansion, independent of the closed forms.

    Convolves the integer coefficient vectors of P_n(2x-1) and
    P_m(2x-1), then integrates the product term by term against the
    exact log moments.
    """
    check_order(n, EXACT_ORACLE_MAX_ORDER, name="n")
    check_order(m, EXACT_ORACLE_MAX_ORDER, name="m")
    a = coeffs_exact(n).coeffs
    b = coeffs_exact(m).coeffs
    conv = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            conv[i + j] += ai * bj
    return sum(
        (c * monomial_log_moment(k) for k, c in enumerate(conv) if c), Fraction(0)
    )


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on [-1, 1].

    Nodes are strictly increasing and symmetric about 0; weights are
    positive, symmetric and sum to 2.  A rule of this degree integrates
    polynomials of degree <= 2*degree - 1 exactly.
    """

    degree: int
    nodes: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True)
class PanelDecomposition:
    """Dyadic panels of [0, 1] accumulating toward x = 0.

    ``breakpoints`` is the decreasing sequence 2**0, 2**-1, ...,
    2**-num_panels; integration covers [truncation_point, 1] and drops
    the tail below the truncation point.
    """

    num_panels: int
    breakpoints: np.ndarray

    @property
    def truncation_point(self) -> float:
        return float(self.breakpoints[-1])


def dyadic_panels(num_panels: int = DEFAULT_NUM_PANELS) -> PanelDecomposition:
    """Geometrically graded panel decomposition with ratio 1/2."""
    if not isinstance(num_panels, int) or isinstance(num_panels, bool) or num_panels < 1:
        raise ValueError(f"num_panels must be a positive integer, got {num_panels!r}")
    return PanelDecomposition(
        num_panels=num_panels,
        breakpoints=2.0 ** -np.arange(num_panels + 1, dtype=np.float64),
    )


def _legendre_pair(degree: int, t: float):
    """P_degree(t) and its derivative via the recurrence pair."""
    p_prev, p_cur = 1.0, t
    for k in range(1, degree):
        p_prev, p_cur = p_cur, ((2 * k + 1) * t * p_cur - k * p_prev) / (k + 1)
    dp = degree * (t * p_cur - p_prev) / (t * t - 1.0)
    return p_cur, dp


def gauss_legendre_rule(degree: int) -> QuadratureRule:
    """Build the degree-node Gauss-Legendre rule by Newton iteration.

    Each node starts from the Chebyshev-like guess
    cos(pi (i - 1/4) / (degree + 1/2)) and is polished by Newton steps on
    P_degree evaluated through the recurrence, to an increment below
    1e-15.  Weights are 2 / ((1 - t**2) P'_degree(t)**2).  Only half the
    roots are solved; the rest follow by symmetry, which keeps the rule
    exactly symmetric.

    Raises ConvergenceError if any root fails to settle in 100 steps.
    """
    if not isinstance(degree, int) or isinstance(degree, bool):
        raise ValueError(f"degree must be an integer, got {degree!r}")
    if not 1 <= degree <= MAX_QUAD_DEGREE:
        raise ValueError(f"degree must be in [1, {MAX_QUAD_DEGREE}], got {degree}")
    nodes = np.empty(degree)
    weights = np.empty(degree)
    for i in range(1, (degree + 1) // 2 + 1):
        t = math.cos(math.pi * (i - 0.25) / (degree + 0.5))
        for _ in range(100):
            p, dp = _legendre_pair(degree, t)
            step = p / dp
            t -= step
            if abs(step) <= 1e-15:
                break
        else:
            raise ConvergenceError(
                f"Newton iteration for node {i} of the degree-{degree} rule "
                f"did not converge in 100 steps"
            )
        _, dp = _legendre_pair(degree, t)
        w = 2.0 / ((1.0 - t * t) * dp * dp)
        nodes[i - 1], weights[i - 1] = -t, w
        nodes[degree - i], weights[degree - i] = t, w
    if degree % 2:
        nodes[degree // 2] = 0.0  # middle root of an odd-degree rule is exact
    return QuadratureRule(degree=degree, nodes=nodes, weights=weights)


def shifted_legendre_table(x: np.ndarray, n_max: int) -> np.ndarray:
    """Vectorized recurrence table: row n holds P_n(2x-1) at every x."""
    x = np.asarray(x, dtype=np.float64)
    table = np.empty((n_max + 1, x.size))
    t = 2.0 * x - 1.0
    table[0] = 1.0
    if n_max >= 1:
        table[1] = t
    for k in range(1, n_max):
        table[k + 1] = ((2 * k + 1) * t * table[k] - k * table[k - 1]) / (k + 1)
    return table


def _panel_grid(panels: PanelDecomposition, rule: QuadratureRule):
    """Map the rule onto every panel; returns flat node and weight arrays."""
    his = panels.breakpoints[:-1]
    los = panels.breakpoints[1:]
    mid = 0.5 * (his + los)
    half = 0.5 * (his - los)
    x = (mid[:, None] + half[:, None] * rule.nodes[None, :]).ravel()
    w = (half[:, None] * rule.weights[None, :]).ravel()
    return x, w


def quad_entry_oracle(
    n: int,
    m: int,
    panels: PanelDecomposition | None = None,
    rule: QuadratureRule | None = None,
    *,
    max_order=None,
) -> float:
    """N[n, m] by graded-panel Gauss-Legendre quadrature.

    Sums w * P_n(2x-1) P_m(2x-1) log(x) over every panel node, with each
    panel mapped affinely from [-1, 1].  The dropped tail below the
    truncation point is bounded by eps * (1 + |log eps|), which is below
    1e-16 for the default 64-panel mesh.
    """
    check_order(n, max_order, name="n")
    check_order(m, max_order, name="m")
    if panels is None:
        panels = dyadic_panels()
    if rule is None:
        rule = gauss_legendre_rule(DEFAULT_QUAD_DEGREE)
    x, w = _panel_grid(panels, rule)
    table = shifted_legendre_table(x, max(n, m))
    return float(np.dot(w, table[n] * table[m] * np.log(x)))


@dataclass(frozen=True)
class PairCheck:
    """Outcome of comparing one (n, m) pair against an oracle."""

    n: int
    m: int
    passed: bool
    abs_err: float | None = None
    rel_err: float | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Results of a closed-form-vs-oracle sweep over 0 <= m <= n <= max_order."""

    mode: str
    max_order: int
    checks: list = field(default_factory=list)

    @property
    def num_pairs(self) -> int:
        return len(self.checks)

    @property
    def num_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def worst_abs(self) -> float | None:
        errs = [c.abs_err for c in self.checks if c.abs_err is not None]
        return max(errs) if errs else None

    @property
    def worst_rel(self) -> float | None:
        errs = [c.rel_err for c in self.checks if c.rel_err is not None]
        return max(errs) if errs else None


def verify_range(
    max_order: int,
    mode: str = "exact",
    *,
    panels: PanelDecomposition | None = None,
    rule: QuadratureRule | None = None,
    entry_fn=None,
    max_order_cap=None,
) -> VerificationReport:
    """Check the closed forms against an oracle on all pairs up to max_order.

    ``mode`` selects the oracle: "exact" demands perfect rational
    equality against the monomial oracle (max_order capped at 40);
    "quad" accepts relative deviation <= QUAD_REL_TOL, or absolute
    deviation <= QUAD_ABS_TOL once the value underflows that scale.
    Failures are recorded in the report, never raised.

    ``entry_fn`` substitutes the closed-form side, which is the hook the
    test suite uses to inject a perturbed entry and watch the sweep fail.
    """
    # Imported here so the oracle paths above stay import-independent of
    # the module they are meant to check.
    from . import exactmoments

    if mode not in ("exact", "quad"):
        raise ValueError(f"mode must be 'exact' or 'quad', got {mode!r}")
    if mode == "exact":
        check_order(max_order, VERIFY_EXACT_MAX_ORDER, name="max_order")
    else:
        check_order(
            max_order,
            MAX_ORDER if max_order_cap is None else max_order_cap,
            name="max_order",
        )

    if entry_fn is None:

        def entry_fn(n, m):
            return exactmoments.entry(n, m, max_order=max_order)

    checks = []
    if mode == "exact":
        for n in range(max_order + 1):
            for m in range(n + 1):
                ok = entry_fn(n, m) == exact_entry_oracle(n, m)
                checks.append(PairCheck(n=n, m=m, passed=ok))
    else:
        if panels is None:
            panels = dyadic_panels()
        if rule is None:
            rule = gauss_legendre_rule(DEFAULT_QUAD_DEGREE)
        x, w = _panel_grid(panels, rule)
        log_x = np.log(x)
        table = shifted_legendre_table(x, max_order)
        for n in range(max_order + 1):
            for m in range(n + 1):
                # identical arithmetic to quad_entry_oracle on the same grid
                approx = float(np.dot(w, table[n] * table[m] * log_x))
                reference = float(entry_fn(n, m))
                abs_err = abs(approx - reference)
                rel_err = abs_err / abs(reference) if reference else math.inf
                ok = rel_err <= QUAD_REL_TOL or abs_err <= QUAD_ABS_TOL
                checks.append(
                    PairCheck(n=n, m=m, passed=ok, abs_err=abs_err, rel_err=rel_err)
                )
    return VerificationReport(mode=mode, max_order=max_order, checks=checks)
