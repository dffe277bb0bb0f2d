from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Optional
from mvhodge.errors import UserInputError
from mvhodge.partition import Partition, EMPTY_PARTITION


def _is_zero(value) -> bool:
    if hasattr(value, "is_zero"):
        return value.is_zero()
    return value == 0


class PSeries:
    """
    Truncated series in the variables p = (p1, p2, ...). The monomial p_mu = p_{mu_1}...p_{mu_l} is keyed by the
    partition mu, so multiplying monomials is the multiset union of the keys. Only keys of weight |mu| <= d_max are
    kept; an optional support restricts the stored keys further to a set closed under taking sub-multisets.
    """

    __slots__ = ("terms", "d_max", "support")

    def __init__(self, terms: Dict[Partition, object], d_max: int, support: Optional[FrozenSet[Partition]] = None):
        self.d_max = d_max
        self.support = support
        self.terms: Dict[Partition, object] = {
            mu: c for mu, c in terms.items() if mu.size <= d_max and self.admits(mu) and not _is_zero(c)
        }

    def admits(self, mu: Partition) -> bool:
        if mu.size > self.d_max:
            return False
        return self.support is None or mu in self.support

    @staticmethod
    def one(d_max: int, support: Optional[FrozenSet[Partition]] = None) -> "PSeries":
        return PSeries({EMPTY_PARTITION: Fraction(1)}, d_max, support)

    def coefficient(self, mu: Partition):
        return self.terms.get(mu, 0)

    @property
    def constant_term(self):
        return self.coefficient(EMPTY_PARTITION)

    def keys(self) -> Iterable[Partition]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def _bounds(self, other: "PSeries"):
        d_max = min(self.d_max, other.d_max)
        if self.support is None:
            support = other.support
        elif other.support is None:
            support = self.support
        else:
            support = self.support & other.support
        return d_max, support

    def __add__(self, other):
        if isinstance(other, PSeries):
            d_max, support = self._bounds(other)
            terms = dict(self.terms)
            for mu, c in other.terms.items():
                terms[mu] = terms[mu] + c if mu in terms else c
            return PSeries(terms, d_max, support)
        return NotImplemented

    def __neg__(self):
        return PSeries({mu: -c for mu, c in self.terms.items()}, self.d_max, self.support)

    def __sub__(self, other):
        if isinstance(other, PSeries):
            return self + (-other)
        return NotImplemented

    def scale(self, factor) -> "PSeries":
        return PSeries({mu: c * factor for mu, c in self.terms.items()}, self.d_max, self.support)

    def __mul__(self, other):
        if not isinstance(other, PSeries):
            return self.scale(other)
        d_max, support = self._bounds(other)
        product: Dict[Partition, object] = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                if mu.size + nu.size > d_max:
                    continue
                key = mu.union(nu)
                if support is not None and key not in support:
                    continue
                product[key] = product[key] + a * b if key in product else a * b
        return PSeries(product, d_max, support)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(mu) == other.coefficient(mu) for mu in keys)

    def __repr__(self):
        body = ", ".join(f"p[{mu}]: {self.terms[mu]!r}" for mu in self.keys())
        return f"PSeries({{{body}}}, d_max={self.d_max})"


def downward_closure(partitions: Iterable[Partition]) -> FrozenSet[Partition]:
    """ All sub-multisets of the given partitions; a valid support for PSeries products """
    closure = set()
    for mu in partitions:
        closure.update(mu.sub_multisets())
    return frozenset(closure)


def series_exp(x: PSeries) -> PSeries:
    """
    Exponential of a p-series without constant term, summed to the weight bound.
    :raises UserInputError: if the constant term is nonzero
    """
    if not _is_zero(x.constant_term):
        raise UserInputError("series_exp needs a p-series with zero constant term")
    result = PSeries.one(x.d_max, x.support)
    term = PSeries.one(x.d_max, x.support)
    # every key of x has weight >= 1, so x^n vanishes beyond n = d_max
    for n in range(1, x.d_max + 1):
        term = (term * x).scale(Fraction(1, n))
        if term.is_zero():
            break
        result = result + term
    return result


def series_log(x: PSeries) -> PSeries:
    """
    Logarithm of a p-series with constant term 1, summed to the weight bound.
    :raises UserInputError: if the constant term is not 1
    """
    if x.constant_term != 1:
        raise UserInputError(f"series_log needs a p-series with constant term 1, got {x.constant_term}")
    y = x - PSeries.one(x.d_max, x.support)
    result = PSeries({}, x.d_max, x.support)
    power = PSeries.one(x.d_max, x.support)
    for n in range(1, x.d_max + 1):
        power = power * y
        if power.is_zero():
            break
        result = result + power.scale(Fraction(1 if n % 2 == 1 else -1, n))
    return result
