from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from threading import Lock
from typing import List
from mvhodge.errors import ConsistencyError, UserInputError
from mvhodge.laurent_series import LaurentSeries, sine_series

__all__ = ["BernoulliCache", "BgCoefficient", "bernoulli", "b_g", "bg_coefficient", "half_csc_series",
           "inverse_double_sine", "power_sum", "harmonic", "F_brute", "F_closed", "F_0g_polynomial_part",
           "F_0g_bernoulli_part", "pair_sine_series", "pair_sine_via_bg", "theorem31_trig_side"]


class BernoulliCache:
    """
    Table of Bernoulli numbers B_0..B_m (convention B_1 = -1/2), obtained by dividing t by e^t - 1 as formal power
    series. The table grows on demand and is shared between threads.
    """

    def __init__(self):
        self._table: List[Fraction] = [Fraction(1)]
        self._lock = Lock()

    @staticmethod
    def _compute(m_max: int) -> List[Fraction]:
        # (e^t - 1) / t = sum t^k / (k+1)!
        quotient = LaurentSeries(0, [Fraction(1, factorial(k + 1)) for k in range(m_max + 1)], m_max).invert()
        return [Fraction(quotient.coefficient(k)) * factorial(k) for k in range(m_max + 1)]

    def get(self, m: int) -> Fraction:
        if m < 0:
            raise UserInputError(f"Bernoulli index must be non-negative, got {m}")
        table = self._table
        if m < len(table):
            return table[m]
        with self._lock:
            if m >= len(self._table):
                self._table = self._compute(max(m, 2 * len(self._table)))
            return self._table[m]

    def values(self, m_max: int) -> List[Fraction]:
        self.get(m_max)
        return self._table[:m_max + 1]


_CACHE = BernoulliCache()


def bernoulli(m: int) -> Fraction:
    return _CACHE.get(m)


@dataclass(frozen=True)
class BgCoefficient:
    g: int
    value: Fraction


def b_g(g: int) -> Fraction:
    """
    The coefficient of the λ_g conjecture: 1 for g = 0, otherwise (2^{2g-1} - 1) / 2^{2g-1} · |B_{2g}| / (2g)!.
    """
    if g < 0:
        raise UserInputError(f"Genus must be non-negative, got {g}")
    if g == 0:
        return Fraction(1)
    power = 2 ** (2 * g - 1)
    return Fraction(power - 1, power) * abs(bernoulli(2 * g)) / factorial(2 * g)


def bg_coefficient(g: int) -> BgCoefficient:
    return BgCoefficient(g, b_g(g))


def half_csc_series(order: int, rate=1) -> LaurentSeries:
    """
    Series of (rate·t/2) / sin(rate·t/2) up to t^order, by inverting the sine series. For rate 1 the coefficient of
    t^{2g} is b_g.
    """
    if order < 0:
        raise UserInputError(f"Series order must be non-negative, got {order}")
    half = Fraction(rate) / 2
    sine = sine_series(half, order + 1)
    return sine.invert().shift(1) * half


def inverse_double_sine(h: int, max_order: int) -> LaurentSeries:
    """
    1 / (2 sin(hλ/2)) up to λ^max_order, read off the b_g: the coefficient of λ^{2g-1} is b_g h^{2g-1}.
    """
    coefficients = []
    for k in range(-1, max_order + 1):
        coefficients.append(b_g((k + 1) // 2) * Fraction(h) ** k if k % 2 else 0)
    return LaurentSeries(-1, coefficients, max_order)


def power_sum(d: int, m: int) -> Fraction:
    """
    Σ_{i=1}^{d-1} i^m through the Bernoulli closed form. The closed form counts 0^0 = 1, which the empty-sum
    convention for m = 0 removes again.
    """
    if d < 1:
        raise UserInputError(f"power_sum needs d >= 1, got {d}")
    if m < 0:
        raise UserInputError(f"power_sum needs m >= 0, got {m}")
    total = sum(comb(m + 1, k) * bernoulli(k) * Fraction(d) ** (m + 1 - k) for k in range(m + 1)) / (m + 1)
    if m == 0:
        total -= 1
    return total


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, a) for a in range(1, n + 1)), Fraction(0))


def _check_d(d: int):
    if d < 2:
        raise UserInputError(f"F_{{g1,g2}}(d) needs d >= 2, got {d}")


def F_brute(g1: int, g2: int, d: int) -> Fraction:
    """ Literal sum over i + j = d of i^{2g1-1} j^{2g2-1} """
    _check_d(d)
    return sum((Fraction(i) ** (2 * g1 - 1) * Fraction(d - i) ** (2 * g2 - 1) for i in range(1, d)), Fraction(0))


def F_closed(g1: int, g2: int, d: int) -> Fraction:
    """
    Double Bernoulli sum for F_{g1,g2}(d), valid when both genera are positive.
    """
    if g1 < 1 or g2 < 1:
        raise UserInputError(f"Closed form of F_{{{g1},{g2}}} needs g1, g2 >= 1; use F_0g_polynomial_part instead")
    _check_d(d)
    g = g1 + g2
    total = Fraction(0)
    for k in range(2 * g2):
        sign = -1 if (2 * g2 - 1 - k) % 2 else 1
        outer = Fraction(sign * comb(2 * g2 - 1, k), 2 * g - 1 - k)
        for l in range(2 * g - 1 - k):
            total += outer * comb(2 * g - 1 - k, l) * bernoulli(l) * Fraction(d) ** (2 * g - 1 - l)
    return total


def F_0g_bernoulli_part(g: int, d: int) -> Fraction:
    """ The Bernoulli double sum plus (2g-1)d^{2g-2}: everything in F_{0,g}(d) except the harmonic term """
    total = Fraction((2 * g - 1) * d ** (2 * g - 2))
    for k in range(2 * g - 1):
        sign = -1 if (2 * g - 1 - k) % 2 else 1
        outer = Fraction(sign * comb(2 * g - 1, k), 2 * g - 1 - k)
        for l in range(2 * g - 1 - k):
            total += outer * comb(2 * g - 1 - k, l) * bernoulli(l) * Fraction(d) ** (2 * g - 1 - l)
    return total


def F_0g_polynomial_part(g: int, d: int) -> Fraction:
    """
    Splits F_{0,g}(d) into d^{2g-1}·H_{d-1} and a polynomial part, and checks the polynomial part against its
    Bernoulli expansion.
    :return: F_{0,g}(d) - d^{2g-1} H_{d-1}
    :raises ConsistencyError: if the two evaluations disagree
    """
    if g < 1:
        raise UserInputError(f"F_0g_polynomial_part needs g >= 1, got {g}")
    polynomial_part = F_brute(0, g, d) - Fraction(d) ** (2 * g - 1) * harmonic(d - 1)
    expected = F_0g_bernoulli_part(g, d)
    if polynomial_part != expected:
        raise ConsistencyError(f"Polynomial part of F_{{0,{g}}}({d}) is {polynomial_part}, expansion gives {expected}")
    return polynomial_part


def pair_sine_series(d: int, max_order: int) -> LaurentSeries:
    """ Σ_{i+j=d} λ² / (8 sin(iλ/2) sin(jλ/2)) by series arithmetic, up to λ^max_order """
    total = LaurentSeries.zero(max_order)
    for i in range(1, d):
        first = sine_series(Fraction(i, 2), max_order + 1).invert()
        second = sine_series(Fraction(d - i, 2), max_order + 1).invert()
        total = total + (first * second).shift(2) * Fraction(1, 8)
    return total


def pair_sine_via_bg(d: int, max_order: int) -> LaurentSeries:
    """ ½ Σ_g λ^{2g} Σ_{g1+g2=g} b_{g1} b_{g2} F_{g1,g2}(d), up to λ^max_order """
    coefficients = []
    for k in range(max_order + 1):
        if k % 2:
            coefficients.append(0)
            continue
        g = k // 2
        coefficients.append(sum((b_g(g1) * b_g(g - g1) * F_brute(g1, g - g1, d) for g1 in range(g + 1)),
                                Fraction(0)) / 2)
    return LaurentSeries(0, coefficients, max_order)


def theorem31_trig_side(d: int, max_order: int) -> LaurentSeries:
    """
    -H_{d-1} (dλ/2) / (d sin(dλ/2)) + Σ_{i+j=d} λ² / (8 sin(iλ/2) sin(jλ/2)), up to λ^max_order
    """
    single = half_csc_series(max_order, rate=d) * (-harmonic(d - 1) / d)
    if d < 2:
        return single
    return single + pair_sine_series(d, max_order)
