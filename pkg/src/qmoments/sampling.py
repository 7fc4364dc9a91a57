"""Deterministic sampling of admissible parameter points.

Verification reports must reproduce byte-for-byte across platforms and
Python versions, so sampling uses an explicitly spelled-out generator
instead of anything implementation-defined: SplitMix64, whose state advances
by the constant 0x9E3779B97F4A7C15 and whose output is finalized by two
xor-shift-multiply rounds.  Bounded integers are drawn by rejection below
the largest exact multiple of the range width, so there is no modulo bias
and the stream of states consumed is itself deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInputError
from .points import QPoint

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Minimal deterministic 64-bit generator (public-domain SplitMix64 scheme)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive, via rejection sampling."""
        if hi < lo:
            raise InvalidInputError("randint requires lo <= hi")
        width = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % width)
        while True:
            draw = self.next_u64()
            if draw < limit:
                return lo + draw % width


def _draw_rational(rng: SplitMix64, bound: int, excluded: tuple[int, ...]) -> Fraction:
    # Numerator and denominator drawn uniformly from [-bound, bound],
    # re-drawing a zero denominator and any excluded value.
    while True:
        num = rng.randint(-bound, bound)
        den = rng.randint(-bound, bound)
        if den == 0:
            continue
        value = Fraction(num, den)
        if any(value == e for e in excluded):
            continue
        return value


def sample_points(trials: int, seed: int, bound: int) -> list[QPoint]:
    """A deterministic list of ``trials`` admissible points.

    q avoids {0, 1, -1} and a avoids -1 by rejection re-sampling; identical
    (trials, seed, bound) always produce the identical list.
    """
    if trials < 1:
        raise InvalidInputError("sample_points requires trials >= 1")
    if bound < 2:
        raise InvalidInputError("sample_points requires bound >= 2")
    rng = SplitMix64(seed)
    points = []
    for _ in range(trials):
        q = _draw_rational(rng, bound, (0, 1, -1))
        a = _draw_rational(rng, bound, (-1,))
        points.append(QPoint(q, a))
    return points
