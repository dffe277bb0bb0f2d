from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union
from mvhodge.errors import InexactDivisionError
from mvhodge.gaussian import GaussianRational, ZERO

# degree reported for the zero polynomial; deliberately not an integer
ZERO_POLYNOMIAL_DEGREE = None

Scalar = Union[int, Fraction, GaussianRational]


def _trim(coefficients: List[GaussianRational]) -> Tuple[GaussianRational, ...]:
    end = len(coefficients)
    while end > 0 and coefficients[end - 1].is_zero():
        end -= 1
    return tuple(coefficients[:end])


class TauPolynomial:
    """
    Exact polynomial in the formal variable τ with Gaussian rational coefficients, stored from the constant term
    upwards with trailing zeros removed.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        self.coefficients = _trim([GaussianRational.coerce(c) for c in coefficients])

    @staticmethod
    def _from_trimmed(coefficients: Tuple[GaussianRational, ...]) -> "TauPolynomial":
        result = object.__new__(TauPolynomial)
        result.coefficients = coefficients
        return result

    @staticmethod
    def constant(value: Scalar) -> "TauPolynomial":
        return TauPolynomial([value])

    @staticmethod
    def monomial(degree: int, value: Scalar = 1) -> "TauPolynomial":
        if degree < 0:
            raise ValueError(f"Monomial degree must be non-negative, got {degree}")
        return TauPolynomial([0] * degree + [value])

    @property
    def degree(self) -> Optional[int]:
        if len(self.coefficients) == 0:
            return ZERO_POLYNOMIAL_DEGREE
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return len(self.coefficients) == 0

    def coefficient(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return ZERO

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coefficients)

    def real_coefficients(self) -> List[Fraction]:
        """
        Returns the coefficients as rationals.
        :raises ValueError: if any coefficient has a nonzero imaginary part
        """
        if not self.is_real():
            raise ValueError(f"Polynomial {self} has non-real coefficients")
        return [c.re for c in self.coefficients]

    def conjugate(self) -> "TauPolynomial":
        return TauPolynomial._from_trimmed(tuple(c.conjugate() for c in self.coefficients))

    def derivative(self) -> "TauPolynomial":
        return TauPolynomial([c * k for k, c in enumerate(self.coefficients)][1:])

    def __call__(self, tau: Scalar) -> GaussianRational:
        result = ZERO
        for c in reversed(self.coefficients):
            result = result * tau + c
        return result

    def __add__(self, other):
        if isinstance(other, TauPolynomial):
            a, b = self.coefficients, other.coefficients
            if len(a) < len(b):
                a, b = b, a
            summed = list(a)
            for k, c in enumerate(b):
                summed[k] = summed[k] + c
            return TauPolynomial._from_trimmed(_trim(summed))
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self + TauPolynomial.constant(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TauPolynomial._from_trimmed(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if isinstance(other, (TauPolynomial, int, Fraction, GaussianRational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TauPolynomial):
            a, b = self.coefficients, other.coefficients
            if not a or not b:
                return ZERO_POLYNOMIAL
            product = [ZERO] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x.is_zero():
                    continue
                for j, y in enumerate(b):
                    product[i + j] = product[i + j] + x * y
            return TauPolynomial._from_trimmed(_trim(product))
        if isinstance(other, (int, Fraction, GaussianRational)):
            if other == 0:
                return ZERO_POLYNOMIAL
            return TauPolynomial._from_trimmed(tuple(c * other for c in self.coefficients))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            inverse = GaussianRational.coerce(other).reciprocal()
            return self * inverse
        if isinstance(other, TauPolynomial):
            return tau_exact_div(self, other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ONE_POLYNOMIAL
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, other: "TauPolynomial") -> Tuple["TauPolynomial", "TauPolynomial"]:
        """
        Polynomial long division over the Gaussian rationals.
        :param other: the nonzero divisor
        :return: the tuple (quotient, remainder) with deg(remainder) < deg(other)
        """
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        remainder = list(self.coefficients)
        divisor = other.coefficients
        lead_inverse = divisor[-1].reciprocal()
        shift_count = len(remainder) - len(divisor) + 1
        if shift_count <= 0:
            return ZERO_POLYNOMIAL, self
        quotient = [ZERO] * shift_count
        for shift in range(shift_count - 1, -1, -1):
            factor = remainder[shift + len(divisor) - 1] * lead_inverse
            quotient[shift] = factor
            if factor.is_zero():
                continue
            for k, c in enumerate(divisor):
                remainder[shift + k] = remainder[shift + k] - factor * c
        return TauPolynomial(quotient), TauPolynomial(remainder[:len(divisor) - 1])

    def __eq__(self, other):
        if isinstance(other, TauPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction, GaussianRational)):
            if other == 0:
                return self.is_zero()
            return len(self.coefficients) == 1 and self.coefficients[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coefficients) <= 1:
            return hash(self.coefficients[0]) if self.coefficients else 0
        return hash(self.coefficients)

    def to_json_value(self) -> list:
        """ Coefficients from the constant term upwards """
        return [c.to_json_value() for c in self.coefficients]

    def __repr__(self):
        return f"TauPolynomial({list(self.coefficients)!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            coefficient = f"({c})" if not c.is_real() else str(c)
            if k == 0:
                terms.append(coefficient)
            elif k == 1:
                terms.append(f"{coefficient}*t")
            else:
                terms.append(f"{coefficient}*t^{k}")
        return " + ".join(terms)


ZERO_POLYNOMIAL = TauPolynomial()
ONE_POLYNOMIAL = TauPolynomial([1])
TAU = TauPolynomial([0, 1])


def tau_exact_div(numerator: TauPolynomial, denominator: TauPolynomial) -> TauPolynomial:
    """
    Divides two τ-polynomials and insists on a zero remainder.
    :param numerator: the dividend
    :param denominator: the nonzero divisor
    :return: the exact quotient q with numerator = q·denominator
    :raises InexactDivisionError: carrying quotient and remainder, if the division leaves a remainder
    """
    quotient, remainder = numerator.divmod(denominator)
    if not remainder.is_zero():
        raise InexactDivisionError(quotient, remainder, f"({numerator}) / ({denominator}) leaves remainder {remainder}")
    return quotient
