from fractions import Fraction

import pytest

from qmoments import (
    InvalidInputError,
    Polynomial,
    QPoint,
    coeff_b,
    coeff_lambda,
    recurrence_table,
    s_polynomial,
    s_polynomials,
)

F = Fraction


def test_b_pinned_values(ref_point):
    assert coeff_b(0, ref_point) == 6
    assert coeff_b(1, ref_point) == F(-24, 7)


def test_b0_collapses_to_simple_form(small_points):
    # The vanishing (1 - q^n) factors at n = 0 leave b_0 = (1+a)/(1-q).
    assert coeff_b(0, QPoint(F(1, 3), 1)) == 3
    for point in small_points:
        assert coeff_b(0, point) == (1 + point.a) / (1 - point.q)


def test_lambda_pinned_values(ref_point):
    assert coeff_lambda(1, ref_point) == -20
    assert coeff_lambda(2, ref_point) == F(54, 49)


def test_lambda_zero_factor():
    assert coeff_lambda(1, QPoint(F(1, 2), F(-1, 2))) == 0


def test_lambda_even_branch_closed_form(small_points):
    for point in small_points:
        q, a = point.q, point.a
        for n in (2, 4, 6):
            expected = (
                q**n
                * (1 + a) ** 2
                * (1 - q ** (n - 1))
                * (1 - q**n)
                / (1 - q ** (2 * n - 1)) ** 2
            )
            assert coeff_lambda(n, point) == expected


def test_index_domain_errors(ref_point):
    with pytest.raises(InvalidInputError):
        coeff_b(-1, ref_point)
    with pytest.raises(InvalidInputError):
        coeff_lambda(0, ref_point)


def test_s_initial_and_pinned(ref_point):
    assert s_polynomial(0, ref_point) == Polynomial.one()
    assert s_polynomial(1, ref_point) == Polynomial([-6, 1])
    assert s_polynomial(2, ref_point) == Polynomial([F(-4, 7), F(-18, 7), 1])


def test_s_monic_of_correct_degree(ref_point, small_points):
    for point in (ref_point, small_points[0]):
        family = s_polynomials(24, point)
        for n, poly in enumerate(family):
            assert poly.degree == n
            assert poly.leading_coefficient() == 1
    for point in small_points[1:4]:
        family = s_polynomials(12, point)
        for n, poly in enumerate(family):
            assert poly.degree == n
            assert poly.leading_coefficient() == 1


def test_s_satisfies_recurrence(ref_point):
    family = s_polynomials(8, ref_point)
    x = Polynomial.x()
    for n in range(1, 8):
        lhs = family[n + 1]
        rhs = (x - coeff_b(n, ref_point)) * family[n] - coeff_lambda(
            n, ref_point
        ) * family[n - 1]
        assert lhs == rhs


def test_recurrence_table(ref_point):
    table = recurrence_table(5, ref_point)
    assert table.b_at(0) == coeff_b(0, ref_point)
    assert table.b_at(5) == coeff_b(5, ref_point)
    assert table.lambda_at(1) == -20
    assert table.lambda_at(5) == coeff_lambda(5, ref_point)
    with pytest.raises(InvalidInputError):
        table.lambda_at(0)
    with pytest.raises(InvalidInputError):
        table.b_at(6)
    with pytest.raises(InvalidInputError):
        recurrence_table(-1, ref_point)


def test_negative_exponent_handling():
    # Odd-branch b_1 contains q^{-1}; exact rational powers keep it finite.
    point = QPoint(F(5, 3), F(1, 4))
    value = coeff_b(1, point)
    assert value.denominator > 0
