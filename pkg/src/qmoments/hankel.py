"""Hankel determinants of the moment sequence.

For a moment sequence generated by a three-term recurrence the (n+1) x (n+1)
Hankel determinant det(mu_{i+j}) collapses to the product
prod_{i=1}^{n} lambda_i^{n+1-i}; ``hankel_check`` evaluates both sides
exactly and reports whether they agree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from . import moments, recurrence
from .errors import InvalidInputError
from .points import QPoint


def exact_determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by exact rational Gaussian elimination.

    Pivots on the first nonzero entry in each column; a column with no
    usable pivot makes the determinant 0.  Everything stays a Fraction, so
    the result is exact.
    """
    size = len(rows)
    if size == 0:
        raise InvalidInputError("determinant of an empty matrix is undefined")
    work = [list(row) for row in rows]
    if any(len(row) != size for row in work):
        raise InvalidInputError("determinant requires a square matrix")
    det = Fraction(1)
    for col in range(size):
        pivot_row = next(
            (r for r in range(col, size) if work[r][col] != 0), None
        )
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pivot = work[col][col]
        det *= pivot
        for r in range(col + 1, size):
            factor = work[r][col] / pivot
            if factor == 0:
                continue
            row_r, row_c = work[r], work[col]
            for c in range(col, size):
                row_r[c] -= factor * row_c[c]
    return det


class HankelCheck(NamedTuple):
    determinant: Fraction
    lambda_product: Fraction
    equal: bool


def hankel_check(n: int, point: QPoint, entries: str = "closed") -> HankelCheck:
    """Compare det(P_{i+j}(a)) with prod lambda_i^{n+1-i} for the (n+1)-size matrix.

    ``entries`` selects how the matrix is filled: "closed" uses the
    closed-form moments P_m(a), "table" substitutes mu_m from the moment
    engine; the theorem makes the two choices identical.
    """
    if n < 0:
        raise InvalidInputError("hankel_check requires n >= 0")
    if entries == "closed":
        values = [moments.moment_closed_form(m, point) for m in range(2 * n + 1)]
    elif entries == "table":
        values = list(moments.moment_table(2 * n, point).mu)
    else:
        raise InvalidInputError(
            f"unknown entries choice {entries!r} (expected 'closed' or 'table')"
        )
    matrix = [[values[i + j] for j in range(n + 1)] for i in range(n + 1)]
    det = exact_determinant(matrix)
    product = Fraction(1)
    for i in range(1, n + 1):
        product *= recurrence.coeff_lambda(i, point) ** (n + 1 - i)
    return HankelCheck(det, product, det == product)
