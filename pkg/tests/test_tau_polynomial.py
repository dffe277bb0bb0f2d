from fractions import Fraction
import pytest
from mvhodge.errors import InexactDivisionError
from mvhodge.gaussian import GaussianRational, I
from mvhodge.tau_polynomial import TAU, ONE_POLYNOMIAL, ZERO_POLYNOMIAL, TauPolynomial, tau_exact_div


def test_trimming_and_degree():
    assert TauPolynomial([1, 0, 0]).degree == 0
    assert TauPolynomial([0, 0]).is_zero()
    assert ZERO_POLYNOMIAL.degree is None
    assert TauPolynomial.monomial(3, 2).coefficient(3) == 2
    assert TauPolynomial.monomial(3).coefficient(7) == 0


def test_arithmetic():
    p = TauPolynomial([1, 1])
    assert p * p == TauPolynomial([1, 2, 1])
    assert p ** 3 == TauPolynomial([1, 3, 3, 1])
    assert p - p == ZERO_POLYNOMIAL
    assert 2 * TAU + 1 == TauPolynomial([1, 2])
    assert (TAU * I).is_real() is False
    assert TauPolynomial([1, 2, 3]).derivative() == TauPolynomial([2, 6])
    assert TauPolynomial([1, 2, 3])(2) == 17


def test_exact_division():
    numerator = TauPolynomial([0, 1]) * TauPolynomial([1, 1]) * TauPolynomial([Fraction(1, 2), 3])
    assert tau_exact_div(numerator, TauPolynomial([1, 1])) == TauPolynomial([0, Fraction(1, 2), 3])
    assert numerator / TAU == TauPolynomial([1, 1]) * TauPolynomial([Fraction(1, 2), 3])


def test_inexact_division_carries_remainder():
    with pytest.raises(InexactDivisionError) as error:
        tau_exact_div(TauPolynomial([1, 0, 1]), TauPolynomial([1, 1]))
    assert error.value.remainder == TauPolynomial([2])
    assert error.value.quotient == TauPolynomial([-1, 1])


def test_divmod():
    quotient, remainder = TauPolynomial([5, 0, 1]).divmod(TAU)
    assert quotient == TAU
    assert remainder == TauPolynomial([5])
    quotient, remainder = ONE_POLYNOMIAL.divmod(TauPolynomial([0, 0, 1]))
    assert quotient.is_zero()
    assert remainder == ONE_POLYNOMIAL
    with pytest.raises(ZeroDivisionError):
        ONE_POLYNOMIAL.divmod(ZERO_POLYNOMIAL)


def test_real_coefficients():
    assert TauPolynomial([GaussianRational(1), Fraction(1, 3)]).real_coefficients() == [1, Fraction(1, 3)]
    with pytest.raises(ValueError):
        TauPolynomial([I]).real_coefficients()
    assert TauPolynomial([I, 1]).conjugate() == TauPolynomial([-I, 1])
