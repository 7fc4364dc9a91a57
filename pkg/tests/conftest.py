from fractions import Fraction

import pytest

from qmoments import QPoint, sample_points


@pytest.fixture(scope="session")
def ref_point():
    """The hand-checked reference point (q, a) = (1/2, 2)."""
    return QPoint(Fraction(1, 2), Fraction(2))


@pytest.fixture(scope="session")
def small_points():
    """A few admissible points with small heights, for fast unit-test loops."""
    return sample_points(6, 20250809, 50)


@pytest.fixture(scope="session")
def sampled_points():
    """Default-height sample used where the checks are cheap."""
    return sample_points(10, 7, 1000)
