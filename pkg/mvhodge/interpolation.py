from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable, Dict, List, Sequence, Tuple
from mvhodge.errors import InterpolationError, UserInputError

ExponentVector = Tuple[int, ...]


def newton_coefficients(points: Sequence[int], values: Sequence[Fraction]) -> List[Fraction]:
    """
    Monomial coefficients (lowest degree first) of the polynomial through (points[k], values[k]), by Newton divided
    differences.
    :param points: distinct integer abscissae
    :param values: the values at these points
    :return: coefficients of a polynomial of degree < len(points)
    """
    if len(points) != len(values):
        raise UserInputError(f"Got {len(points)} points but {len(values)} values")
    if len(set(points)) != len(points):
        raise UserInputError(f"Interpolation points must be distinct, got {list(points)}")
    size = len(points)
    table = [Fraction(v) for v in values]
    divided = [table[0]]
    for level in range(1, size):
        table = [(table[k + 1] - table[k]) / (points[k + level] - points[k]) for k in range(size - level)]
        divided.append(table[0])

    # expand the Newton form from the innermost bracket outwards
    coefficients = [Fraction(0)] * size
    for level in range(size - 1, -1, -1):
        shifted = [Fraction(0)] + coefficients[:-1]
        coefficients = [shifted[k] - points[level] * coefficients[k] for k in range(size)]
        coefficients[0] += divided[level]
    return coefficients


def interpolate(fn: Callable[[int], Fraction], points: Sequence[int], degree: int) -> List[Fraction]:
    """
    Interpolates fn, expected to be a polynomial of the given degree, and checks the expectation on one more point.
    :raises InterpolationError: if the extra point is off the interpolated polynomial
    """
    if len(points) < degree + 2:
        raise UserInputError(f"Degree {degree} needs {degree + 2} points for the check, got {len(points)}")
    fit = list(points[:degree + 1])
    coefficients = newton_coefficients(fit, [fn(x) for x in fit])
    for x in points[degree + 1:]:
        expected = sum((c * Fraction(x) ** k for k, c in enumerate(coefficients)), Fraction(0))
        actual = fn(x)
        if actual != expected:
            raise InterpolationError(f"Value {actual} at {x} does not fit a polynomial of degree {degree} "
                                     f"(expected {expected})")
    return coefficients


def simplex_points(n: int, radius: int) -> List[ExponentVector]:
    """ All x in Z^n with x_i >= 0 and Σx_i <= radius, in lexicographic order """
    if n < 1:
        raise UserInputError(f"Lattice dimension must be positive, got {n}")
    return [x for x in product(range(radius + 1), repeat=n) if sum(x) <= radius]


def compositions(total: int, n: int) -> List[ExponentVector]:
    """ Exponent vectors of length n with non-negative entries summing to total """
    return [x for x in product(range(total + 1), repeat=n) if sum(x) == total]


def forward_difference(values: Dict[ExponentVector, Fraction], k: ExponentVector) -> Fraction:
    """ Δ^k f(0) = Σ_{j<=k} (-1)^{|k|-|j|} Π C(k_i, j_i) f(j) """
    total = Fraction(0)
    weight = sum(k)
    for j in product(*(range(entry + 1) for entry in k)):
        sign = -1 if (weight - sum(j)) % 2 else 1
        factor = 1
        for top, bottom in zip(k, j):
            factor *= comb(top, bottom)
        total += sign * factor * values[j]
    return total


def top_homogeneous_part(fn: Callable[[ExponentVector], Fraction], n: int, degree: int) -> Dict[ExponentVector, Fraction]:
    """
    Coefficients of the degree-`degree` homogeneous component of fn, a polynomial in n variables of total degree at
    most `degree`, from forward differences on the lattice {offset + x : Σx <= degree + 1}; fn receives x.
    :return: exponent vector -> coefficient
    :raises InterpolationError: if a difference of order degree + 1 does not vanish
    """
    values = {x: Fraction(fn(x)) for x in simplex_points(n, degree + 1)}
    for k in compositions(degree + 1, n):
        residue = forward_difference(values, k)
        if residue != 0:
            raise InterpolationError(f"Difference Δ^{k} = {residue} does not vanish; values are not a polynomial "
                                     f"of degree {degree} in {n} variables")
    result = {}
    for k in compositions(degree, n):
        scale = 1
        for entry in k:
            scale *= factorial(entry)
        result[k] = forward_difference(values, k) / scale
    return result
