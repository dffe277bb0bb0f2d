"""
Join and cut moves of the cut-and-join equation.

The τ-derivative of the disconnected generating function is (iλ/2)·Σ_{i,j}(ij p_{i+j}∂_i∂_j + (i+j)p_ip_j∂_{i+j})
applied to it. Taking the logarithm and reading off p_μ gives, with ν, ν¹, ν² ranging over the moves below,

    ∂_τ 𝒞_{g,μ} = i·[ Σ_J I₁(ν)𝒞_{g,ν} + Σ_C I₂(ν)𝒞_{g-1,ν} + Σ_{g₁+g₂=g} Σ_C I₃(ν¹,ν²)𝒞_{g₁,ν¹}𝒞_{g₂,ν²} ]

which is d/dτ J⁰ = -J¹ with J⁰ = i^{|μ|-l(μ)}𝒞_{g,μ}. I₁ agrees with (μ_i+μ_j)/(1+δ)·m_{μ_i+μ_j}(ν); I₂ and I₃ are
reconstructed from the operator and pinned by the exact differential-equation check.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple
from mvhodge.gaussian import i_power
from mvhodge.partition import Partition
from mvhodge.tau_polynomial import TauPolynomial, ZERO_POLYNOMIAL


@dataclass(frozen=True)
class JoinMove:
    source: Partition
    result: Partition
    i1: Fraction


@dataclass(frozen=True)
class CutMove:
    source: Partition
    result: Partition
    i2: Fraction
    # ordered (ν¹, ν²) with ν¹ ∪ ν² = result
    splits: Dict[Tuple[Partition, Partition], Fraction] = field(default_factory=dict, compare=False)


def join_set(mu: Partition) -> List[JoinMove]:
    """
    All partitions obtained by merging two parts of μ, with their I₁ coefficients.
    :param mu: the source partition
    :return: one move per resulting partition, sorted by result; empty when μ has a single part
    """
    counts = mu.multiplicities()
    values = sorted(counts)
    coefficients: Dict[Partition, Fraction] = defaultdict(Fraction)
    for x in values:
        for y in values:
            if x == y and counts[x] < 2:
                continue
            nu = mu.remove(x, y).add(x + y)
            coefficients[nu] += Fraction((x + y) * nu.multiplicity(x + y), 2)
    return [JoinMove(mu, nu, coefficients[nu]) for nu in sorted(coefficients)]


def cut_set(mu: Partition) -> List[CutMove]:
    """
    All partitions obtained by cutting one part of μ in two, with the I₂ coefficient and the I₃ coefficients of every
    ordered way to distribute the pieces over two factors.
    :param mu: the source partition
    :return: one move per resulting partition, sorted by result
    """
    i2: Dict[Partition, Fraction] = defaultdict(Fraction)
    i3: Dict[Partition, Dict[Tuple[Partition, Partition], Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for k in sorted(set(mu.parts)):
        if k < 2:
            continue
        rest = mu.remove(k)
        rest_subsets = rest.sub_multisets()
        for i in range(1, k):
            j = k - i
            nu = rest.add(i, j)
            delta = 1 if i == j else 0
            i2[nu] += Fraction(i * j * nu.multiplicity(i) * (nu.multiplicity(j) - delta), 2)
            for first in rest_subsets:
                second = rest.remove(*first.parts)
                nu1 = first.add(i)
                nu2 = second.add(j)
                i3[nu][(nu1, nu2)] += Fraction(i * j * nu1.multiplicity(i) * nu2.multiplicity(j), 2)
    return [CutMove(mu, nu, i2[nu], dict(i3[nu])) for nu in sorted(i2)]


def join_aggregate(mu: Partition) -> Fraction:
    """ Σ_{ν∈J(μ)} I₁(ν)/|Aut(ν)| """
    return sum((move.i1 / move.result.aut_order() for move in join_set(mu)), Fraction(0))


def join_aggregate_expected(mu: Partition) -> Fraction:
    """ The closed value (l(μ)-1)·|μ|/|Aut(μ)| of the join aggregate """
    return Fraction((mu.length - 1) * mu.size, mu.aut_order())


CoefficientFunction = Callable[[int, Partition], TauPolynomial]


def j0_polynomial(g: int, mu: Partition, coefficient_fn: CoefficientFunction) -> TauPolynomial:
    return coefficient_fn(g, mu) * i_power(mu.size - mu.length)


def j1_polynomial(g: int, mu: Partition, coefficient_fn: CoefficientFunction, i3_scale=1) -> TauPolynomial:
    """
    J¹_{g,μ}(τ) from connected coefficients 𝒞_{g',ν}(τ) supplied by coefficient_fn. i3_scale multiplies every I₃
    coefficient and exists to perturb the equation on purpose.
    """
    total = ZERO_POLYNOMIAL
    for move in join_set(mu):
        total = total + coefficient_fn(g, move.result) * move.i1
    for move in cut_set(mu):
        if g >= 1 and move.i2 != 0:
            total = total + coefficient_fn(g - 1, move.result) * move.i2
        for (nu1, nu2), i3 in move.splits.items():
            for g1 in range(g + 1):
                total = total + coefficient_fn(g1, nu1) * coefficient_fn(g - g1, nu2) * (i3 * i3_scale)
    return total * i_power(mu.size - mu.length - 1)


def differential_equation_residual(g: int, mu: Partition, coefficient_fn: CoefficientFunction,
                                   i3_scale=1) -> TauPolynomial:
    """
    d/dτ J⁰_{g,μ} + J¹_{g,μ}; the zero polynomial exactly when the cut-and-join equation holds.
    """
    return j0_polynomial(g, mu, coefficient_fn).derivative() + j1_polynomial(g, mu, coefficient_fn, i3_scale)
