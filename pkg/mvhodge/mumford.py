"""
λ-classes of the Hodge bundle modulo Mumford's relation c(𝔼)c(𝔼∨) = 1.

A combination of λ-monomials in genus g is a dict from exponent vectors (k_1, ..., k_g) of λ_1^{k_1}···λ_g^{k_g} to
rational coefficients. The normal form rewrites λ_k² = Σ_{i=1}^{k} (-1)^{i+1} 2λ_{k-i}λ_{k+i} (λ_0 = 1, λ_j = 0 for
j > g) until every λ_k appears at most once.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple
from mvhodge.errors import DimensionError, UserInputError

LambdaCombination = Dict[Tuple[int, ...], Fraction]


def _check_genus(g: int):
    if g < 0:
        raise UserInputError(f"Genus must be non-negative, got {g}")


def _unit(g: int) -> Tuple[int, ...]:
    return (0,) * g


def raw_lambda(i: int, g: int) -> LambdaCombination:
    """ λ_i as a combination: 1 for i = 0, zero for i > g """
    if i < 0:
        raise UserInputError(f"λ-index must be non-negative, got {i}")
    if i > g:
        return {}
    if i == 0:
        return {_unit(g): Fraction(1)}
    exponents = [0] * g
    exponents[i - 1] = 1
    return {tuple(exponents): Fraction(1)}


def raw_add(*combinations: LambdaCombination) -> LambdaCombination:
    total: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    for combination in combinations:
        for key, coefficient in combination.items():
            total[key] += coefficient
    return {key: value for key, value in total.items() if value != 0}


def raw_scale(combination: LambdaCombination, factor) -> LambdaCombination:
    return {key: value * factor for key, value in combination.items() if value * factor != 0}


def raw_multiply(first: LambdaCombination, second: LambdaCombination) -> LambdaCombination:
    product: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    for a, x in first.items():
        for b, y in second.items():
            product[tuple(p + q for p, q in zip(a, b))] += x * y
    return {key: value for key, value in product.items() if value != 0}


def _highest_square(exponents: Tuple[int, ...]) -> Optional[int]:
    for index in range(len(exponents), 0, -1):
        if exponents[index - 1] >= 2:
            return index
    return None


def mumford_reduce(combination: LambdaCombination, g: int) -> "MumfordNormalForm":
    """
    Rewrites squares of the highest λ_k first. Each rewrite moves weight to indices further apart, so Σ k²·e_k grows
    strictly at fixed degree and the loop terminates.
    """
    _check_genus(g)
    pending: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    for key, value in combination.items():
        if len(key) != g:
            raise UserInputError(f"Exponent vector {key} does not belong to genus {g}")
        pending[key] += Fraction(value)
    reduced: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    while pending:
        key, coefficient = pending.popitem()
        if coefficient == 0:
            continue
        k = _highest_square(key)
        if k is None:
            reduced[key] += coefficient
            continue
        base = list(key)
        base[k - 1] -= 2
        for i in range(1, k + 1):
            if k + i > g:
                break
            exponents = list(base)
            if k - i > 0:
                exponents[k - i - 1] += 1
            exponents[k + i - 1] += 1
            sign = 1 if (i + 1) % 2 == 0 else -1
            pending[tuple(exponents)] += 2 * sign * coefficient
    return MumfordNormalForm(g, {key: value for key, value in reduced.items() if value != 0}, _reduced=True)


class MumfordNormalForm:
    """
    Rational combination of square-free λ-monomials in genus g. Products are reduced again, so every instance is in
    normal form.
    """

    def __init__(self, g: int, terms: LambdaCombination = None, _reduced: bool = False):
        _check_genus(g)
        self.g = g
        terms = terms if terms is not None else {}
        if not _reduced:
            terms = mumford_reduce(terms, g).terms
        self.terms: LambdaCombination = dict(terms)

    @staticmethod
    def of_lambda(i: int, g: int) -> "MumfordNormalForm":
        return MumfordNormalForm(g, raw_lambda(i, g), _reduced=True)

    @staticmethod
    def constant(value, g: int) -> "MumfordNormalForm":
        value = Fraction(value)
        return MumfordNormalForm(g, {_unit(g): value} if value != 0 else {}, _reduced=True)

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def _check_other(self, other: "MumfordNormalForm"):
        if self.g != other.g:
            raise UserInputError(f"Cannot combine λ-classes of genus {self.g} and {other.g}")

    def __add__(self, other):
        if not isinstance(other, MumfordNormalForm):
            other = MumfordNormalForm.constant(other, self.g)
        self._check_other(other)
        return MumfordNormalForm(self.g, raw_add(self.terms, other.terms), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return MumfordNormalForm(self.g, raw_scale(self.terms, -1), _reduced=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MumfordNormalForm):
            self._check_other(other)
            return mumford_reduce(raw_multiply(self.terms, other.terms), self.g)
        if isinstance(other, (int, Fraction)):
            return MumfordNormalForm(self.g, raw_scale(self.terms, Fraction(other)), _reduced=True)
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MumfordNormalForm.constant(other, self.g)
        if not isinstance(other, MumfordNormalForm):
            return NotImplemented
        return self.g == other.g and self.terms == other.terms

    def __hash__(self):
        return hash((self.g, frozenset(self.terms.items())))

    def single_term(self) -> Optional[Tuple[Fraction, Tuple[int, ...]]]:
        """ (c, exponents) when the form is c·M for one monomial M, else None """
        if len(self.terms) != 1:
            return None
        (key, value), = self.terms.items()
        return value, key

    def monomials(self, psi: Tuple[int, ...] = ()) -> List[Tuple[Fraction, "LambdaMonomial"]]:
        return [(value, LambdaMonomial(self.g, key, tuple(psi))) for key, value in sorted(self.terms.items())]

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for key, value in sorted(self.terms.items(), reverse=True):
            label = format_lambda_exponents(key)
            if label == "1":
                parts.append(str(value))
            elif value == 1:
                parts.append(label)
            else:
                parts.append(f"{value}·{label}")
        return " + ".join(parts)

    def to_json_value(self) -> dict:
        return {format_lambda_exponents(key): value for key, value in sorted(self.terms.items(), reverse=True)}

    def __repr__(self):
        return f"MumfordNormalForm(g={self.g}, {self})"


def format_lambda_exponents(exponents: Tuple[int, ...]) -> str:
    factors = []
    for index, power in enumerate(exponents, start=1):
        if power == 1:
            factors.append(f"λ{index}")
        elif power > 1:
            factors.append(f"λ{index}^{power}")
    return "·".join(factors) if factors else "1"


@dataclass(frozen=True)
class LambdaMonomial:
    """ λ_1^{k_1}···λ_g^{k_g}·ψ_1^{j_1}···ψ_n^{j_n} on the moduli space of genus g curves with n marked points """
    g: int
    lambdas: Tuple[int, ...]
    psi: Tuple[int, ...]

    def __post_init__(self):
        _check_genus(self.g)
        if len(self.lambdas) != self.g:
            raise UserInputError(f"Genus {self.g} needs {self.g} λ-exponents, got {len(self.lambdas)}")
        if any(k < 0 for k in self.lambdas) or any(j < 0 for j in self.psi):
            raise UserInputError(f"Exponents must be non-negative: {self.lambdas}, {self.psi}")

    @staticmethod
    def of(g: int, lambda_indices: Tuple[int, ...] = (), psi: Tuple[int, ...] = ()) -> "LambdaMonomial":
        """ Builds the monomial from the list of λ-indices, e.g. (1, 1, 3) for λ_1²λ_3 """
        exponents = [0] * g
        for index in lambda_indices:
            if not 1 <= index <= g:
                raise UserInputError(f"λ-index {index} is out of range for genus {g}")
            exponents[index - 1] += 1
        return LambdaMonomial(g, tuple(exponents), tuple(psi))

    @property
    def n(self) -> int:
        return len(self.psi)

    def degree(self) -> int:
        return sum(index * k for index, k in enumerate(self.lambdas, start=1)) + sum(self.psi)

    def dimension(self) -> int:
        return 3 * self.g - 3 + self.n

    def is_dimensional(self) -> bool:
        return self.degree() == self.dimension()

    def check_dimension(self):
        if not self.is_dimensional():
            raise DimensionError(self.g, self.n, self.degree())

    def __str__(self):
        label = format_lambda_exponents(self.lambdas)
        for position, power in enumerate(self.psi, start=1):
            if power == 0:
                continue
            factor = f"ψ{position}" if power == 1 else f"ψ{position}^{power}"
            label = factor if label == "1" else f"{label}·{factor}"
        return label


def factorial_ch_raw(n: int, g: int) -> LambdaCombination:
    """ Σ_{i+j=n} (-1)^{i-1} i λ_iλ_j before reduction, which is n!·ch_n for 1 <= n < 2g """
    terms = []
    for i in range(1, n + 1):
        sign = 1 if (i - 1) % 2 == 0 else -1
        terms.append(raw_scale(raw_multiply(raw_lambda(i, g), raw_lambda(n - i, g)), sign * i))
    return raw_add(*terms)


def ch_raw(k: int, g: int) -> LambdaCombination:
    """ ch_k(𝔼) as an unreduced combination """
    if k < 0:
        raise UserInputError(f"Chern character index must be non-negative, got {k}")
    if k == 0:
        return raw_scale(raw_lambda(0, g), g)
    if k >= 2 * g:
        return {}
    return raw_scale(factorial_ch_raw(k, g), Fraction(1, factorial(k)))


def ch_to_lambda(k: int, g: int) -> MumfordNormalForm:
    """
    ch_k(𝔼) in λ-classes: g for k = 0, Σ_{i+j=k} (-1)^{i-1} iλ_iλ_j / k! for 0 < k < 2g and zero beyond.
    """
    _check_genus(g)
    return mumford_reduce(ch_raw(k, g), g)


def newton_power_sum(n: int, g: int) -> MumfordNormalForm:
    """
    n!·ch_n as the power sum p_n of the Chern roots, from Newton's identities
    p_n = Σ_{i=1}^{n-1} (-1)^{i-1} λ_i p_{n-i} + (-1)^{n-1} n λ_n, without using Mumford's relation on the way.
    """
    _check_genus(g)
    if n < 1:
        raise UserInputError(f"Power sums are indexed from 1, got {n}")
    sums: List[LambdaCombination] = [{}]
    for m in range(1, n + 1):
        terms = []
        for i in range(1, m):
            sign = 1 if (i - 1) % 2 == 0 else -1
            terms.append(raw_scale(raw_multiply(raw_lambda(i, g), sums[m - i]), sign))
        last = 1 if (m - 1) % 2 == 0 else -1
        terms.append(raw_scale(raw_lambda(m, g), last * m))
        sums.append(raw_add(*terms))
    return mumford_reduce(sums[n], g)


def chern_product_coefficients(g: int) -> Dict[int, MumfordNormalForm]:
    """
    Coefficients of t^{2g-m} in Λ∨_g(t)Λ∨_g(-t), m = 0..2g, where Λ∨_g(t) = Σ(-1)^i λ_i t^{g-i}.
    """
    _check_genus(g)
    result = {}
    for m in range(2 * g + 1):
        terms = []
        for i in range(max(0, m - g), min(m, g) + 1):
            j = m - i
            sign = 1 if (i + g) % 2 == 0 else -1
            terms.append(raw_scale(raw_multiply(raw_lambda(i, g), raw_lambda(j, g)), sign))
        result[m] = mumford_reduce(raw_add(*terms), g)
    return result


def chern_product_identity(g: int) -> bool:
    """ Whether Λ∨_g(t)Λ∨_g(-t) reduces to (-1)^g t^{2g} """
    expected = Fraction((-1) ** g)
    for m, coefficient in chern_product_coefficients(g).items():
        if coefficient != (expected if m == 0 else 0):
            return False
    return True
