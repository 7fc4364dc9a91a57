from fractions import Fraction

import pytest

from qmoments import (
    InvalidInputError,
    Polynomial,
    QPoint,
    coeff_b,
    moment_closed_form,
    moment_table,
    moments_via_basis,
    product_basis,
    product_basis_moment,
    s_polynomials,
)

F = Fraction


def test_mu_pinned(ref_point):
    table = moment_table(3, ref_point)
    assert table.mu == (1, 6, 16, F(312, 7))
    assert table.nu[1][1] == -20  # equals lambda_1
    assert table.nu[2][1] == F(-360, 7)  # lambda_1 (b_0 + b_1)


def test_nu_initial_row(ref_point):
    table = moment_table(4, ref_point)
    assert table.nu[0] == (1, 0, 0, 0, 0)


def test_mu0_and_mu1(small_points):
    for point in small_points:
        table = moment_table(1, point)
        assert table.mu[0] == 1
        assert table.mu[1] == coeff_b(0, point)


def test_via_basis_matches_pinned(ref_point):
    assert moments_via_basis(3, ref_point) == (1, 6, 16, F(312, 7))


def test_oracle_agreement(ref_point, small_points):
    assert moments_via_basis(24, ref_point) == moment_table(24, ref_point).mu
    for point in small_points[:3]:
        assert moments_via_basis(10, point) == moment_table(10, point).mu


def test_closed_form_pinned(ref_point):
    assert moment_closed_form(0, ref_point) == 1
    assert moment_closed_form(2, ref_point) == 16
    assert moment_closed_form(3, ref_point) == F(312, 7)


def test_closed_form_degree_one(small_points):
    for point in small_points:
        assert moment_closed_form(1, point) == (1 + point.a) / (1 - point.q)


def test_moment_identity_sampled(small_points):
    for point in small_points:
        mu = moment_table(12, point).mu
        for n in range(13):
            assert mu[n] == moment_closed_form(n, point)


def test_functional_annihilates_family(ref_point, small_points):
    for point, upto in ((ref_point, 24), (small_points[0], 16)):
        mu = moment_table(upto, point).mu
        family = s_polynomials(upto, point)
        for n in range(upto + 1):
            applied = sum(
                (family[n].coefficient(j) * mu[j] for j in range(n + 1)), F(0)
            )
            assert applied == (1 if n == 0 else 0)


def test_product_basis(ref_point):
    assert product_basis(0, ref_point) == Polynomial.one()
    assert product_basis(1, ref_point) == Polynomial([-4, 0, 1])
    expected = Polynomial([-4, 0, 1]) * Polynomial([-1, 0, 1])
    assert product_basis(2, ref_point) == expected


def test_product_moment_pinned(ref_point):
    assert product_basis_moment(0, 0, ref_point, "closed") == 1
    assert product_basis_moment(0, 0, ref_point, "direct") == 1
    assert product_basis_moment(1, 0, ref_point, "closed") == 12
    assert product_basis_moment(1, 0, ref_point, "direct") == 12
    assert product_basis_moment(1, 1, ref_point, "closed") == F(144, 7)
    assert product_basis_moment(1, 1, ref_point, "direct") == F(144, 7)


def test_product_moment_methods_agree(ref_point):
    mu = moment_table(21, ref_point).mu
    for n in range(11):
        for eps in (0, 1):
            closed = product_basis_moment(n, eps, ref_point, "closed")
            direct = product_basis_moment(n, eps, ref_point, "direct", mu=mu)
            assert closed == direct


def test_product_moment_validation(ref_point):
    with pytest.raises(InvalidInputError):
        product_basis_moment(1, 2, ref_point)
    with pytest.raises(InvalidInputError):
        product_basis_moment(1, 0, ref_point, "fancy")
    with pytest.raises(InvalidInputError):
        product_basis_moment(3, 1, ref_point, "direct", mu=(F(1),))
    with pytest.raises(InvalidInputError):
        moment_table(-1, ref_point)
    with pytest.raises(InvalidInputError):
        moments_via_basis(-1, ref_point)
    with pytest.raises(InvalidInputError):
        product_basis(-1, ref_point)
    with pytest.raises(InvalidInputError):
        moment_closed_form(-1, ref_point)


def test_degenerate_point_a_equals_minus_q():
    # a = -q zeroes lambda_1 and with it every moment product that carries it.
    point = QPoint(F(1, 2), F(-1, 2))
    mu = moment_table(6, point).mu
    for n in range(7):
        assert mu[n] == moment_closed_form(n, point)
