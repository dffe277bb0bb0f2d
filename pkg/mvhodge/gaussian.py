from fractions import Fraction
from typing import Union

# Rational numbers are plain fractions: always in lowest terms with a positive denominator.
Rational = Fraction


def to_fraction(value: Union[int, Fraction, str]) -> Fraction:
    """
    Converts integers, fractions and "num/den" strings into a Fraction.
    :param value: the value to convert
    :return: the exact rational value
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational values")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Cannot convert {type(value).__name__} into an exact rational")


def format_fraction(value: Fraction) -> str:
    """ Formats a rational as "num/den", or "num" for integers """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class GaussianRational:
    """
    Exact complex number re + im·i with rational parts. Values are immutable; all operations return new instances.
    Mixing with int and Fraction operands is supported on both sides.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _make(re: Fraction, im: Fraction) -> "GaussianRational":
        result = object.__new__(GaussianRational)
        result.re = re
        result.im = im
        return result

    @staticmethod
    def coerce(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational._make(Fraction(value), Fraction(0))
        raise TypeError(f"Cannot interpret {type(value).__name__} as a Gaussian rational")

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            if other.im == 0:
                return GaussianRational._make(self.re * other.re, self.im * other.re)
            if self.im == 0:
                return GaussianRational._make(self.re * other.re, self.re * other.im)
            return GaussianRational._make(self.re * other.re - self.im * other.im,
                                          self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "GaussianRational":
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return GaussianRational._make(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.reciprocal()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Gaussian rational division by zero")
            return GaussianRational._make(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.reciprocal() * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (self ** -exponent).reciprocal()
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def to_json_value(self):
        return self.re if self.im == 0 else {"re": self.re, "im": self.im}

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return format_fraction(self.re)
        if self.re == 0:
            return f"{format_fraction(self.im)}i"
        sign = "-" if self.im < 0 else "+"
        return f"{format_fraction(self.re)}{sign}{format_fraction(abs(self.im))}i"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)

_I_POWERS = (ONE, I, GaussianRational(-1, 0), GaussianRational(0, -1))


def i_power(k: int) -> GaussianRational:
    """ Returns i^k for any integer k """
    return _I_POWERS[k % 4]
