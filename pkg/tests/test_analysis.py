import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from loglegram.analysis import (
    bilinear_log_form,
    diag_scaling_table,
    expansion_l2_error,
    log_expansion_coeffs,
)
from loglegram.errors import OrderLimitError
from loglegram.exactmoments import entry, entry_diag, gram_exact, gram_float
from loglegram.oracles import (
    _panel_grid,
    dyadic_panels,
    gauss_legendre_rule,
    shifted_legendre_table,
)


@pytest.fixture(scope="module")
def quad_grid():
    x, w = _panel_grid(dyadic_panels(), gauss_legendre_rule(32))
    return x, w


def test_basis_norm_confirmed_by_quadrature(quad_grid):
    # the 1/(2n+1) normalization used by the expansion coefficients
    x, w = quad_grid
    table = shifted_legendre_table(x, 10)
    for n in range(11):
        norm = float(np.dot(w, table[n] * table[n]))
        assert abs(norm - 1.0 / (2 * n + 1)) < 1e-12


def test_log_squared_integral_is_two(quad_grid):
    x, w = quad_grid
    assert float(np.dot(w, np.log(x) ** 2)) == pytest.approx(2.0, abs=1e-12)


def test_expansion_coefficients():
    coeffs = log_expansion_coeffs(2)
    assert coeffs == [Fraction(-1), Fraction(3, 2), Fraction(-5, 6)]
    assert all(isinstance(c, Fraction) for c in coeffs)
    assert len(log_expansion_coeffs(40)) == 41


def test_expansion_coefficient_closed_form():
    coeffs = log_expansion_coeffs(32)
    for n in range(1, 33):
        assert coeffs[n] == Fraction((2 * n + 1) * (-1) ** (n + 1), n * (n + 1))


def test_bilinear_unit_vectors_reproduce_entries():
    gram = gram_exact(32)
    for n in range(33):
        for m in range(33):
            a = [Fraction(0)] * (n + 1)
            a[n] = Fraction(1)
            b = [Fraction(0)] * (m + 1)
            b[m] = Fraction(1)
            assert bilinear_log_form(a, b, gram) == entry(n, m)


def test_bilinear_known_values():
    gram = gram_exact(2)
    # f = P_0 + P_1 shifted = 2x, so the form is 4 * integral x^2 log x = -4/9
    assert bilinear_log_form([1, 1], [1, 1], gram) == Fraction(-4, 9)
    assert bilinear_log_form([1], [1], gram) == Fraction(-1)
    # unit vectors reduce to a single entry
    assert bilinear_log_form([0, 0, 1], [0, 1], gram) == Fraction(1, 4)


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=12
)


@given(
    st.lists(small_fractions, min_size=1, max_size=6),
    st.lists(small_fractions, min_size=1, max_size=6),
    st.lists(small_fractions, min_size=1, max_size=6),
    small_fractions,
    small_fractions,
)
def test_bilinearity_exact(a, a2, b, alpha, beta):
    gram = gram_exact(6)
    width = max(len(a), len(a2))
    a = a + [Fraction(0)] * (width - len(a))
    a2 = a2 + [Fraction(0)] * (width - len(a2))
    combined = [alpha * u + beta * v for u, v in zip(a, a2)]
    lhs = bilinear_log_form(combined, b, gram)
    rhs = alpha * bilinear_log_form(a, b, gram) + beta * bilinear_log_form(a2, b, gram)
    assert lhs == rhs


def test_bilinearity_float_mode():
    rng = np.random.default_rng(7)
    gram = gram_float(8)
    for _ in range(25):
        a, a2, b = (rng.uniform(-1, 1, size=9).tolist() for _ in range(3))
        alpha, beta = rng.uniform(-2, 2, size=2)
        combined = [alpha * u + beta * v for u, v in zip(a, a2)]
        lhs = bilinear_log_form(combined, b, gram)
        rhs = alpha * bilinear_log_form(a, b, gram) + beta * bilinear_log_form(
            a2, b, gram
        )
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_bilinear_mixed_inputs_promote_to_float():
    gram = gram_exact(2)
    value = bilinear_log_form([Fraction(1), 0.5], [Fraction(1)], gram)
    assert isinstance(value, float)


def test_bilinear_rejects_undersized_gram():
    gram = gram_exact(1)
    with pytest.raises(OrderLimitError):
        bilinear_log_form([1, 2, 3], [1], gram)
    with pytest.raises(ValueError):
        bilinear_log_form([], [1], gram)


def test_l2_error_matches_telescoped_tail():
    # Parseval telescopes: the exact error at a given order is 1/(order+1)
    for order in (0, 1, 2, 3, 5, 8, 13, 21):
        report = expansion_l2_error(order)
        assert report.l2_error == pytest.approx(1.0 / (order + 1), abs=1e-9)
        assert report.order == order
        assert len(report.coefficients) == order + 1


def test_parseval_consistency():
    # quadrature error + captured energy = integral of log^2 = 2
    for order in range(33):
        report = expansion_l2_error(order)
        captured = sum(
            float(c) ** 2 / (2 * n + 1) for n, c in enumerate(report.coefficients)
        )
        assert abs(report.l2_error**2 + captured - 2.0) < 1e-9


def test_l2_error_order_cap():
    with pytest.raises(OrderLimitError):
        expansion_l2_error(513)


def test_diag_scaling_table_values():
    table = diag_scaling_table(64)
    assert len(table) == 65
    assert table[0] == (0, -1.0)
    assert table[1] == (1, float(Fraction(-4, 3)))
    assert table[2] == (2, float(Fraction(-41, 30)))
    for n, value in table:
        assert value == float((2 * n + 1) * entry_diag(n))


def test_diag_scaling_table_is_decreasing_and_bounded():
    table = diag_scaling_table(128)
    values = [v for _, v in table]
    assert all(a > b for a, b in zip(values, values[1:]))
    floor = -2 * math.log(2) - 1e-12
    assert all(v >= floor for v in values)
