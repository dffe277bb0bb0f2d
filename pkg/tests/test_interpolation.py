from fractions import Fraction
import pytest
from mvhodge.errors import InterpolationError, UserInputError
from mvhodge.interpolation import compositions, forward_difference, interpolate, newton_coefficients, \
    simplex_points, top_homogeneous_part


def test_newton_coefficients():
    assert newton_coefficients([0, 1, 2], [1, 3, 7]) == [1, 1, 1]
    assert newton_coefficients([2, 5], [Fraction(1, 2), Fraction(7, 2)]) == [Fraction(-3, 2), 1]
    with pytest.raises(UserInputError):
        newton_coefficients([1, 1], [0, 0])


def test_interpolate_checks_extra_points():
    assert interpolate(lambda x: Fraction(x) ** 3 - x, range(6), 3) == [0, -1, 0, 1]
    with pytest.raises(InterpolationError):
        interpolate(lambda x: Fraction(x) ** 4, range(6), 3)
    with pytest.raises(UserInputError):
        interpolate(lambda x: Fraction(x), [0, 1], 1)


def test_lattices():
    assert simplex_points(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert len(simplex_points(3, 2)) == 10
    assert compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]


def test_forward_difference():
    values = {x: Fraction(x[0] * x[1]) for x in simplex_points(2, 2)}
    assert forward_difference(values, (1, 1)) == 1
    assert forward_difference(values, (2, 0)) == 0


def test_top_homogeneous_part():
    def fn(x):
        return Fraction((1 + x[0]) ** 2 * (3 + x[1])) / 2

    assert top_homogeneous_part(fn, 2, 3) == {(0, 3): 0, (1, 2): 0, (2, 1): Fraction(1, 2), (3, 0): 0}
    with pytest.raises(InterpolationError):
        top_homogeneous_part(fn, 2, 2)
