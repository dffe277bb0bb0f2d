"""
Truncated Laurent series in the string coupling λ.

A series knows its coefficients for λ-orders min_order..max_order; everything above max_order is unknown (not zero).
Coefficients are ring elements: ints, Fractions, GaussianRationals or TauPolynomials. Arithmetic keeps track of the
exact precision of results, so a pole in one factor correctly lowers the precision of a product.
"""

from fractions import Fraction
from math import factorial
from typing import Callable, List, Optional, Sequence
from mvhodge.errors import TruncationError
from mvhodge.gaussian import GaussianRational
from mvhodge.tau_polynomial import TauPolynomial

_SCALAR_TYPES = (int, Fraction, GaussianRational, TauPolynomial)


def _invert_scalar(value):
    if isinstance(value, TauPolynomial):
        if value.degree != 0:
            raise ValueError(f"Leading coefficient {value} is not a unit of the coefficient ring")
        return TauPolynomial.constant(value.coefficient(0).reciprocal())
    if isinstance(value, GaussianRational):
        return value.reciprocal()
    return Fraction(1) / value


class LaurentSeries:

    __slots__ = ("min_order", "coefficients", "max_order")

    def __init__(self, min_order: int, coefficients: Sequence, max_order: int):
        """
        :param min_order: λ-order of the first coefficient
        :param coefficients: coefficients for orders min_order, min_order + 1, ...; entries beyond max_order are
        dropped, missing entries up to max_order are zero
        :param max_order: highest known λ-order (inclusive)
        """
        coefficients = list(coefficients[:max(0, max_order - min_order + 1)])
        coefficients.extend([0] * (max_order - min_order + 1 - len(coefficients)))
        start = 0
        while start < len(coefficients) and coefficients[start] == 0:
            start += 1
        if start == len(coefficients):
            self.min_order = max_order + 1
            self.coefficients = ()
        else:
            self.min_order = min_order + start
            self.coefficients = tuple(coefficients[start:])
        self.max_order = max_order

    @staticmethod
    def zero(max_order: int) -> "LaurentSeries":
        return LaurentSeries(max_order + 1, (), max_order)

    @staticmethod
    def constant(value, max_order: int) -> "LaurentSeries":
        return LaurentSeries.monomial(0, value, max_order)

    @staticmethod
    def monomial(order: int, value, max_order: int) -> "LaurentSeries":
        if order > max_order:
            return LaurentSeries.zero(max_order)
        return LaurentSeries(order, [value], max_order)

    def is_zero(self) -> bool:
        return len(self.coefficients) == 0

    @property
    def leading_coefficient(self):
        if self.is_zero():
            raise ValueError("The zero series has no leading coefficient")
        return self.coefficients[0]

    def coefficient(self, order: int):
        """
        Returns the coefficient of λ^order.
        :raises TruncationError: if order lies beyond the known precision
        """
        if order > self.max_order:
            raise TruncationError(f"Coefficient of λ^{order} requested, series is only known up to λ^{self.max_order}")
        if order < self.min_order:
            return 0
        return self.coefficients[order - self.min_order]

    def _known(self, order: int):
        if order < self.min_order or order > self.max_order:
            return 0
        return self.coefficients[order - self.min_order]

    def truncate(self, max_order: int) -> "LaurentSeries":
        if max_order >= self.max_order:
            return self
        return LaurentSeries(self.min_order, self.coefficients, max_order)

    def map_coefficients(self, function: Callable) -> "LaurentSeries":
        return LaurentSeries(self.min_order, [function(c) for c in self.coefficients], self.max_order)

    def shift(self, order: int) -> "LaurentSeries":
        """ Exact product with λ^order; the known range moves with it """
        return LaurentSeries(self.min_order + order, self.coefficients, self.max_order + order)

    def __add__(self, other):
        if isinstance(other, LaurentSeries):
            top = min(self.max_order, other.max_order)
            low = min(self.min_order, other.min_order)
            return LaurentSeries(low, [self._known(k) + other._known(k) for k in range(low, top + 1)], top)
        if isinstance(other, _SCALAR_TYPES):
            return self + LaurentSeries.constant(other, self.max_order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.min_order, [-c for c in self.coefficients], self.max_order)

    def __sub__(self, other):
        if isinstance(other, (LaurentSeries,) + _SCALAR_TYPES):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            a, b = self, other
            top = min(a.max_order + b.min_order, b.max_order + a.min_order)
            low = a.min_order + b.min_order
            product: List = [0] * max(0, top - low + 1)
            for i, x in enumerate(a.coefficients):
                if x == 0:
                    continue
                for j, y in enumerate(b.coefficients):
                    k = i + j
                    if k >= len(product):
                        break
                    product[k] = product[k] + x * y
            return LaurentSeries(low, product, top)
        if isinstance(other, _SCALAR_TYPES):
            return LaurentSeries(self.min_order, [c * other for c in self.coefficients], self.max_order)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.invert()
        if isinstance(other, _SCALAR_TYPES):
            return self * _invert_scalar(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.invert() ** -exponent
        result = None
        base = self
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        if result is None:
            # relative precision of x^0 is that of x
            return LaurentSeries.constant(1, self.max_order - self.min_order)
        return result

    def invert(self) -> "LaurentSeries":
        """
        Multiplicative inverse. The leading coefficient must be a unit of the coefficient ring.
        :raises ZeroDivisionError: for the zero series
        """
        if self.is_zero():
            raise ZeroDivisionError("Cannot invert the zero series")
        relative = self.max_order - self.min_order
        lead_inverse = _invert_scalar(self.coefficients[0])
        inverse: List = [lead_inverse]
        for k in range(1, relative + 1):
            total = 0
            for j in range(1, k + 1):
                c = self.coefficients[j]
                if c == 0:
                    continue
                total = total + c * inverse[k - j]
            inverse.append(-(total * lead_inverse) if total != 0 else 0)
        return LaurentSeries(-self.min_order, inverse, -self.min_order + relative)

    def agrees_with(self, other: "LaurentSeries", max_order: Optional[int] = None) -> bool:
        """
        Compares two series on their common range of known orders, optionally capped at max_order.
        """
        top = min(self.max_order, other.max_order)
        if max_order is not None:
            top = min(top, max_order)
        low = min(self.min_order, other.min_order)
        return all(self._known(k) == other._known(k) for k in range(low, top + 1))

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return (self.max_order == other.max_order and self.min_order == other.min_order
                    and self.coefficients == other.coefficients)
        if isinstance(other, _SCALAR_TYPES):
            return self.agrees_with(LaurentSeries.constant(other, self.max_order))
        return NotImplemented

    def __hash__(self):
        return hash((self.min_order, self.coefficients, self.max_order))

    def to_json_value(self) -> dict:
        return {"minOrder": self.min_order, "maxOrder": self.max_order, "coefficients": list(self.coefficients)}

    def __repr__(self):
        return f"LaurentSeries({self.min_order}, {list(self.coefficients)!r}, {self.max_order})"

    def __str__(self):
        terms = [f"({c})*λ^{self.min_order + k}" for k, c in enumerate(self.coefficients) if c != 0]
        terms.append(f"O(λ^{self.max_order + 1})")
        return " + ".join(terms)


def laurent_invert(series: LaurentSeries) -> LaurentSeries:
    return series.invert()


def exp_series(rate, max_order: int) -> LaurentSeries:
    """
    Returns e^{rate·λ} up to λ^max_order; rate may be any coefficient ring element (e.g. a TauPolynomial).
    """
    coefficients = [1]
    power = 1
    for k in range(1, max_order + 1):
        power = power * rate
        coefficients.append(power * Fraction(1, factorial(k)))
    return LaurentSeries(0, coefficients, max_order)


def sine_series(rate, max_order: int) -> LaurentSeries:
    """ Returns sin(rate·λ) up to λ^max_order """
    coefficients = [0] * (max_order + 1)
    for k in range(1, max_order + 1, 2):
        sign = 1 if k % 4 == 1 else -1
        coefficients[k] = Fraction(sign, factorial(k)) * rate ** k
    return LaurentSeries(0, coefficients, max_order)
