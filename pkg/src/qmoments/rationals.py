"""Exact rational scalars and their text format.

Every numeric quantity in this library is a ``fractions.Fraction``:
arithmetic is exact, values are always in lowest terms with a positive
denominator, and equality is decidable.  No floating point appears anywhere,
so an equality check is a proof of the identity at the evaluated point.

The text format is ``p/r``, or just ``p`` for integers: decimal digits with
an optional leading minus, e.g. ``-24/7``.  The CLI and report files use it
exclusively.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InvalidInputError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/r`` or ``p`` into a Fraction.

    >>> parse_rational("-24/7")
    Fraction(-24, 7)
    """
    cleaned = text.strip()
    if not _RATIONAL_RE.match(cleaned):
        raise InvalidInputError(
            f"not a rational literal: {text!r} (expected 'p' or 'p/r')"
        )
    num_text, _, den_text = cleaned.partition("/")
    denominator = int(den_text) if den_text else 1
    if denominator == 0:
        raise InvalidInputError(f"zero denominator in rational literal: {text!r}")
    return Fraction(int(num_text), denominator)


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``p/r``, or ``p`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value: Fraction | int | str) -> Fraction:
    """Coerce an int, ``p/r`` string, or Fraction to a Fraction.

    Floats are rejected on purpose: admitting one would silently break the
    exactness guarantee.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"cannot interpret {value!r} as an exact rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInputError(f"cannot interpret {value!r} as an exact rational")
