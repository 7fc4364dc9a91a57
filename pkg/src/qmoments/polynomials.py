"""Dense univariate polynomials and sparse Laurent polynomials over Fraction.

``Polynomial`` stores coefficients by ascending degree with trailing zeros
trimmed, so structural equality is exact polynomial equality.
``LaurentPolynomial`` maps integer exponents (negative allowed) to nonzero
coefficients; zero coefficients are never stored.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import InvalidInputError
from .rationals import as_rational, format_rational

_ZERO = Fraction(0)


class Polynomial:
    """Immutable dense polynomial in one variable x with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        items = [as_rational(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        object.__setattr__(self, "coeffs", tuple(items))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Fraction | int = 1) -> Polynomial:
        if degree < 0:
            raise InvalidInputError("monomial degree must be non-negative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^k, zero outside the stored range."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def times_x(self) -> Polynomial:
        """Multiply by x (degree shift by one)."""
        if not self.coeffs:
            return self
        return Polynomial((_ZERO,) + self.coeffs)

    def __add__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        return Polynomial(
            a + b
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=_ZERO)
        )

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        return self + (-other)

    def __rsub__(self, other: Fraction | int) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if not isinstance(other, Polynomial):
            scalar = as_rational(other)
            return Polynomial(c * scalar for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise InvalidInputError("polynomials only take non-negative powers")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x0: Fraction | int) -> Fraction:
        """Evaluate by Horner's rule."""
        x0 = as_rational(x0)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self!s})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = ("-" if c < 0 else "") if not parts else (" - " if c < 0 else " + ")
            mag = format_rational(abs(c))
            if k == 0:
                term = mag
            else:
                var = "x" if k == 1 else f"x^{k}"
                term = var if abs(c) == 1 else f"{mag}*{var}"
            parts.append(sign + term)
        return "".join(parts)


class LaurentPolynomial:
    """Sparse Laurent polynomial in t: a map from integer exponent to coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] = ()):
        cleaned: dict[int, Fraction] = {}
        for exponent, c in dict(coeffs).items():
            value = as_rational(c)
            if value != 0:
                cleaned[int(exponent)] = value
        object.__setattr__(self, "coeffs", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls()

    @classmethod
    def t_power(cls, exponent: int, coeff: Fraction | int = 1) -> LaurentPolynomial:
        return cls({exponent: coeff})

    def exponents(self) -> list[int]:
        return sorted(self.coeffs)

    def coefficient(self, exponent: int) -> Fraction:
        return self.coeffs.get(exponent, _ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, _ZERO) + c
        return LaurentPolynomial(out)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial | Fraction | int) -> LaurentPolynomial:
        if not isinstance(other, LaurentPolynomial):
            scalar = as_rational(other)
            return LaurentPolynomial({e: c * scalar for e, c in self.coeffs.items()})
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, _ZERO) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, t0: Fraction | int) -> Fraction:
        t0 = as_rational(t0)
        if t0 == 0 and any(e < 0 for e in self.coeffs):
            raise InvalidInputError(
                "cannot evaluate a Laurent polynomial with negative exponents at t = 0"
            )
        return sum((c * t0**e for e, c in self.coeffs.items()), _ZERO)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LaurentPolynomial(0)"
        terms = " + ".join(
            f"({format_rational(c)})*t^{e}" for e, c in sorted(self.coeffs.items())
        )
        return f"LaurentPolynomial({terms})"
