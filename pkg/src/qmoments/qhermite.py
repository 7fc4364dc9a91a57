"""Continuous q-Hermite polynomials in Laurent form.

With x = (t + 1/t)/2 the degree-n continuous q-Hermite polynomial becomes
the palindromic Laurent polynomial

    H_n(t) = sum_{k=0}^{n} [n k]_q t^{2k-n},

whose exponents run over {-n, -n+2, ..., n}.  The classical three-term
recurrence

    H_{n+1}(t) = (t + 1/t) H_n(t) - (1 - q^n) H_{n-1}(t)

is treated as a property to verify against the sum definition, not as a
definition.  ``connection_sides`` ties the closed-form moments P_n to these
polynomials through the substitution a = t^2:

    (q; q^2)_{floor((n+1)/2)} * P_n(t^2) = t^n H_n(t),

which is the coefficientwise identity sum_k [n k]_q t^{2k} = t^n H_n(t).
"""

from __future__ import annotations

from fractions import Fraction

from . import moments, qseries
from .errors import InvalidInputError
from .points import QPoint, validate_q
from .polynomials import LaurentPolynomial
from .rationals import as_rational


def hermite_laurent(n: int, q: Fraction | int) -> LaurentPolynomial:
    """H_n as a Laurent polynomial in t."""
    if n < 0:
        raise InvalidInputError("hermite_laurent requires n >= 0")
    q = validate_q(q)
    return LaurentPolynomial(
        {2 * k - n: qseries.qbinom(n, k, q) for k in range(n + 1)}
    )


def hermite_recurrence_sides(
    n: int, q: Fraction | int
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """(H_{n+1}, (t + 1/t) H_n - (1 - q^n) H_{n-1}) for n >= 1."""
    if n < 1:
        raise InvalidInputError("hermite_recurrence_sides requires n >= 1")
    q = validate_q(q)
    lhs = hermite_laurent(n + 1, q)
    t_plus_inv = LaurentPolynomial({1: 1, -1: 1})
    rhs = t_plus_inv * hermite_laurent(n, q) - hermite_laurent(n - 1, q) * (
        1 - q**n
    )
    return lhs, rhs


def check_hermite_recurrence(n: int, q: Fraction | int) -> bool:
    """Whether the three-term recurrence holds exactly as Laurent polynomials."""
    lhs, rhs = hermite_recurrence_sides(n, q)
    return lhs == rhs


def is_palindromic(poly: LaurentPolynomial) -> bool:
    """Whether coefficients are symmetric under t -> 1/t."""
    return all(c == poly.coefficient(-e) for e, c in poly.coeffs.items())


def connection_sides(
    n: int, t0: Fraction | int, q: Fraction | int
) -> tuple[Fraction, Fraction]:
    """((q;q^2)_{floor((n+1)/2)} P_n(t0^2), t0^n H_n(t0)) for nonzero t0."""
    if n < 0:
        raise InvalidInputError("connection_sides requires n >= 0")
    q = validate_q(q)
    t0 = as_rational(t0)
    if t0 == 0:
        raise InvalidInputError("connection_sides requires t0 != 0")
    point = QPoint(q, t0 * t0)
    lhs = qseries.pochhammer(q, q * q, (n + 1) // 2) * moments.moment_closed_form(
        n, point
    )
    rhs = t0**n * hermite_laurent(n, q)(t0)
    return lhs, rhs


def check_connection(n: int, t0: Fraction | int, q: Fraction | int) -> bool:
    """Whether the substitution identity holds exactly at (q, t0)."""
    lhs, rhs = connection_sides(n, t0, q)
    return lhs == rhs


def connection_laurent_identity(n: int, q: Fraction | int) -> bool:
    """Coefficientwise form: sum_k [n k]_q t^{2k} equals t^n H_n(t)."""
    if n < 0:
        raise InvalidInputError("connection_laurent_identity requires n >= 0")
    q = validate_q(q)
    lhs = LaurentPolynomial({2 * k: qseries.qbinom(n, k, q) for k in range(n + 1)})
    rhs = LaurentPolynomial.t_power(n) * hermite_laurent(n, q)
    return lhs == rhs
