from fractions import Fraction
import pytest
from mvhodge.gaussian import GaussianRational, I, ONE, ZERO, format_fraction, i_power, to_fraction


def test_to_fraction():
    assert to_fraction("-31/967680") == Fraction(-31, 967680)
    assert to_fraction(3) == Fraction(3)
    assert to_fraction(Fraction(2, 4)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        to_fraction(True)
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_format_fraction():
    assert format_fraction(Fraction(1, 24)) == "1/24"
    assert format_fraction(Fraction(-6, 3)) == "-2"
    assert format_fraction(0) == "0"


def test_field_operations():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(1, 3), -1)
    assert a * b == GaussianRational(Fraction(1, 3) + 2, Fraction(2, 3) - 1)
    assert (a / b) * b == a
    assert a * a.reciprocal() == ONE
    assert a.conjugate() == GaussianRational(1, -2)
    assert a.norm() == 5
    assert a - a == ZERO
    assert 1 - I == GaussianRational(1, -1)
    assert 2 / I == GaussianRational(0, -2)


def test_mixed_operands():
    assert GaussianRational(3) == 3
    assert GaussianRational(3) == Fraction(3)
    assert GaussianRational(3, 1) != 3
    assert Fraction(1, 2) * GaussianRational(2, 4) == GaussianRational(1, 2)
    assert hash(GaussianRational(Fraction(1, 2))) == hash(Fraction(1, 2))


def test_powers_of_i():
    assert [i_power(k) for k in range(4)] == [ONE, I, -ONE, -I]
    assert i_power(-1) == -I
    assert I ** 4 == ONE
    assert GaussianRational(1, 1) ** -2 == GaussianRational(0, Fraction(-1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_str():
    assert str(GaussianRational(Fraction(-1, 2))) == "-1/2"
    assert str(I) == "1i"
    assert str(GaussianRational(1, -3)) == "1-3i"
