from fractions import Fraction
import pytest
from mvhodge.errors import TruncationError
from mvhodge.laurent_series import LaurentSeries, exp_series, laurent_invert, sine_series
from mvhodge.tau_polynomial import TAU, TauPolynomial


def test_leading_zeros_are_stripped():
    series = LaurentSeries(-2, [0, 0, 3, 1], 4)
    assert series.min_order == 0
    assert series.coefficient(-5) == 0
    assert series.coefficient(1) == 1
    assert series.coefficient(4) == 0
    assert LaurentSeries.zero(3).is_zero()


def test_truncated_coefficients_raise():
    series = LaurentSeries(0, [1, 2], 2)
    with pytest.raises(TruncationError):
        series.coefficient(3)


def test_pole_lowers_product_precision():
    pole = LaurentSeries(-1, [1], 3)
    regular = LaurentSeries(0, [1, 1], 4)
    product = pole * regular
    assert product.min_order == -1
    assert product.max_order == 3
    assert product.coefficient(0) == 1


def test_inverse_of_sine():
    sine = sine_series(1, 5)
    assert sine.coefficient(5) == Fraction(1, 120)
    cosecant = laurent_invert(sine)
    assert cosecant.min_order == -1
    assert cosecant.max_order == 3
    assert [cosecant.coefficient(k) for k in range(-1, 4)] == [1, 0, Fraction(1, 6), 0, Fraction(7, 360)]
    assert (sine * cosecant).agrees_with(LaurentSeries.constant(1, 4))


def test_exponential():
    assert exp_series(2, 4).coefficient(3) == Fraction(4, 3)
    assert (exp_series(3, 6) * exp_series(-3, 6)) == LaurentSeries.constant(1, 6)
    assert exp_series(1, 3) ** 2 == exp_series(2, 3)


def test_tau_coefficients():
    series = exp_series(TAU, 3)
    assert series.coefficient(2) == TauPolynomial([0, 0, Fraction(1, 2)])
    inverse = series.invert()
    assert inverse.coefficient(3) == TauPolynomial([0, 0, 0, Fraction(-1, 6)])
    assert (series / 2).coefficient(1) == TauPolynomial([0, Fraction(1, 2)])


def test_invert_zero():
    with pytest.raises(ZeroDivisionError):
        LaurentSeries.zero(2).invert()


def test_shift_moves_known_range():
    shifted = LaurentSeries(-1, [2, 0, 5], 1).shift(2)
    assert (shifted.min_order, shifted.max_order) == (1, 3)
    assert shifted.coefficient(3) == 5
    assert shifted.coefficient(0) == 0
    with pytest.raises(TruncationError):
        shifted.coefficient(4)
