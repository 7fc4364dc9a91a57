"""The moment functional of the recurrence family and its closed forms.

L is the unique linear functional on polynomials with L(1) = 1 and
L(s_k) = 0 for k >= 1.  Writing nu[n][k] = L(x^n s_k), the recurrence
x s_k = s_{k+1} + b_k s_k + lambda_k s_{k-1} turns into the table recursion

    nu[n+1][k] = nu[n][k+1] + b_k nu[n][k] + lambda_k nu[n][k-1],

with nu[0] = (1, 0, 0, ...), and the power moments are mu_n = nu[n][0].

``moments_via_basis`` recomputes the same moments by a different route,
expanding x^n in the s-basis by triangular back-substitution; the two must
agree entrywise, which the test suite uses as a cross-oracle.

``moment_closed_form`` evaluates the conjectured (and proved) closed form

    P_n(a) = (1 / (q;q^2)_{floor((n+1)/2)}) * sum_{k=0}^n [n k]_q a^k,

a normalized q-binomial sum that is also a rescaled continuous q-Hermite
value (see the qhermite module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qseries, recurrence
from .errors import InvalidInputError
from .points import QPoint
from .polynomials import Polynomial

_ZERO = Fraction(0)


@dataclass(frozen=True)
class MomentTable:
    """Triangular table nu[n][k] = L(x^n s_k) for 0 <= n <= upto, 0 <= k <= upto - n."""

    upto: int
    nu: tuple[tuple[Fraction, ...], ...]
    mu: tuple[Fraction, ...]


def moment_table(upto: int, point: QPoint) -> MomentTable:
    """Fill the nu-table by its recursion and read off mu_n = nu[n][0]."""
    if upto < 0:
        raise InvalidInputError("moment_table requires upto >= 0")
    b = [recurrence.coeff_b(k, point) for k in range(upto)]
    lam = [recurrence.coeff_lambda(k, point) for k in range(1, upto)]
    rows = [tuple([Fraction(1)] + [_ZERO] * upto)]
    for n in range(upto):
        prev = rows[n]
        row = []
        for k in range(upto - n):
            value = prev[k + 1] + b[k] * prev[k]
            if k >= 1:
                value += lam[k - 1] * prev[k - 1]
            row.append(value)
        rows.append(tuple(row))
    mu = tuple(rows[n][0] for n in range(upto + 1))
    return MomentTable(upto=upto, nu=tuple(rows), mu=mu)


def moments_via_basis(upto: int, point: QPoint) -> tuple[Fraction, ...]:
    """Independent oracle for the moments.

    Expands x^n = sum_k c_k s_k by eliminating the leading coefficient
    against the monic s_k, top down; then mu_n = c_0.  No use of the
    nu-recursion.
    """
    if upto < 0:
        raise InvalidInputError("moments_via_basis requires upto >= 0")
    s = recurrence.s_polynomials(upto, point)
    out = []
    for n in range(upto + 1):
        coeffs = [_ZERO] * n + [Fraction(1)]
        for k in range(n, 0, -1):
            c = coeffs[k]
            if c == 0:
                continue
            for j, sc in enumerate(s[k].coeffs):
                coeffs[j] -= c * sc
        out.append(coeffs[0])
    return tuple(out)


def moment_closed_form(n: int, point: QPoint) -> Fraction:
    """The closed-form moment P_n(a) (normalized q-binomial sum)."""
    if n < 0:
        raise InvalidInputError("moment_closed_form requires n >= 0")
    q, a = point.q, point.a
    total = sum(
        (qseries.qbinom(n, k, q) * a**k for k in range(n + 1)), _ZERO
    )
    return total / qseries.pochhammer(q, q * q, (n + 1) // 2)


def product_basis(n: int, point: QPoint) -> Polynomial:
    """The even product pi_n(x) = prod_{i=0}^{n-1} (x^2 - a^2 q^{2i})."""
    if n < 0:
        raise InvalidInputError("product_basis requires n >= 0")
    q, a = point.q, point.a
    result = Polynomial.one()
    for i in range(n):
        result = result * Polynomial((-(a * a) * q ** (2 * i), 0, 1))
    return result


def product_basis_moment(
    n: int,
    eps: int,
    point: QPoint,
    method: str = "closed",
    mu: tuple[Fraction, ...] | None = None,
) -> Fraction:
    """L(x^eps pi_n) by either route.

    closed:  (-a; q)_{2n+eps} / (q; q^2)_{n+eps}.
    direct:  expand pi_n by the q-binomial theorem in the variable x^2 and
             apply the moment table termwise:
             sum_k [n k]_{q^2} (-1)^k a^{2k} q^{2 C(k,2)} mu_{2(n-k)+eps}.

    ``mu`` may supply precomputed moments (must cover index 2n + eps).
    """
    if n < 0:
        raise InvalidInputError("product_basis_moment requires n >= 0")
    if eps not in (0, 1):
        raise InvalidInputError("eps must be 0 or 1")
    q, a = point.q, point.a
    if method == "closed":
        return qseries.pochhammer(-a, q, 2 * n + eps) / qseries.pochhammer(
            q, q * q, n + eps
        )
    if method == "direct":
        if mu is None:
            mu = moment_table(2 * n + eps, point).mu
        elif len(mu) < 2 * n + eps + 1:
            raise InvalidInputError("supplied moment sequence is too short")
        q2 = q * q
        total = _ZERO
        for k in range(n + 1):
            term = (
                qseries.qbinom(n, k, q2)
                * a ** (2 * k)
                * q ** (2 * qseries.binom2(k))
                * mu[2 * (n - k) + eps]
            )
            total += -term if k % 2 else term
        return total
    raise InvalidInputError(f"unknown method {method!r} (expected 'closed' or 'direct')")
