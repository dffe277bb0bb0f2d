"""
Closed formulas and recursions for Hodge integrals, each evaluable on its own and cross-checked against the
Mariño-Vafa engine by the verification suites.

Integrals on M_{g,n} are written as λ-monomials times ψ-powers. Linear integrals ∫ X / Π(1 - μ_iψ_i) are indexed by
the partition μ, and G_{g,μ} stands for the combination ∫ (λ_{g-1} + Σ_k k!(-1)^{k-1} ch_k λ_g) / Π(1 - μ_iψ_i) read
off the τ-linear term of the engine's hodge polynomial.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Optional, Tuple
from mvhodge.bernoulli import b_g, bernoulli, harmonic, pair_sine_series, pair_sine_via_bg, theorem31_trig_side
from mvhodge.cut_join import cut_set, join_set
from mvhodge.errors import ConsistencyError, DimensionError, UserInputError
from mvhodge.interpolation import ExponentVector, compositions, interpolate, newton_coefficients, \
    top_homogeneous_part
from mvhodge.json_document import JsonDocument, parse_fraction
from mvhodge.laurent_series import LaurentSeries
from mvhodge.logger import Logger
from mvhodge.mumford import LambdaMonomial, MumfordNormalForm, ch_raw, format_lambda_exponents, mumford_reduce, \
    raw_lambda, raw_multiply
from mvhodge.mv_engine import MarinoVafaEngine, default_engine, harmonic_factor
from mvhodge.partition import Partition

_logger = Logger("identities")


@dataclass(frozen=True)
class ExternalConstant:
    monomial: LambdaMonomial
    value: Fraction
    note: str


# values that no formula of this package produces
EXTERNAL_CONSTANTS: Dict[LambdaMonomial, ExternalConstant] = {
    constant.monomial: constant for constant in [
        ExternalConstant(LambdaMonomial.of(3, (2, 3), (2,)), Fraction(1, 120960),
                         "one-point genus 3 value from the Faber-Pandharipande λ_gλ_{g-1} formula"),
    ]
}


@dataclass(frozen=True)
class IdentityCheck:
    """ Both sides of an identity, evaluated exactly """
    lhs: object
    rhs: object
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


class HodgeValue(JsonDocument):
    """
    An exact integral value together with a readable integrand and the formula or engine path that produced it.
    """

    def __init__(self, g: int = 0, integrand: str = "", value: Fraction = None, method: str = ""):
        super().__init__()
        self.g = g
        self.integrand = integrand
        self.value = value
        self.method = method

    def get_attribute_mapping(self) -> dict:
        return {
            "g": "g",
            "integrand": "integrand",
            "value": "value",
            "method": "method",
        }

    def get_custom_mapping(self) -> dict:
        return {
            "g": int,
            "value": parse_fraction,
        }


def check_dimension(g: int, n: int, degree: int):
    """
    :raises DimensionError: if an integrand of the given degree cannot be integrated over M_{g,n}
    """
    if degree != 3 * g - 3 + n:
        raise DimensionError(g, n, degree)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _check_theorem32_range(g: int, m: int):
    if g < 2:
        raise UserInputError(f"The ch-integral formula needs g >= 2, got {g}")
    if not 1 <= m <= 2 * g - 3:
        raise UserInputError(f"The ch-integral formula needs 1 <= m <= {2 * g - 3} for g={g}, got {m}")


def theorem32_rhs(g: int, m: int) -> Fraction:
    """
    The Bernoulli double sums equal to -(2g-2-m)!(-1)^{2g-3-m} ∫_{M_{g,1}} λ_g ch_{2g-2-m}(𝔼) ψ^m.
    :param g: genus, at least 2
    :param m: ψ-exponent, 1 <= m <= 2g-3
    """
    _check_theorem32_range(g, m)
    tail = bernoulli(2 * g - 1 - m)
    if tail == 0:
        return Fraction(0)
    single = Fraction(0)
    for k in range(m):
        single += Fraction(_sign(2 * g - 1 - k) * comb(2 * g - 1, k) * comb(2 * g - 1 - k, 2 * g - 1 - m),
                           2 * g - 1 - k)
    paired = Fraction(0)
    for g1 in range(1, g):
        g2 = g - g1
        inner = Fraction(0)
        for k in range(min(2 * g2 - 1, m - 1) + 1):
            inner += Fraction(_sign(2 * g2 - 1 - k) * comb(2 * g2 - 1, k) * comb(2 * g - 1 - k, 2 * g - 1 - m),
                              2 * g - 1 - k)
        paired += b_g(g1) * b_g(g2) * inner
    return (b_g(g) * single + paired / 2) * tail


def theorem32_ch_integral(g: int, m: int) -> Fraction:
    """ ∫_{M_{g,1}} λ_g ch_{2g-2-m}(𝔼) ψ^m """
    return -theorem32_rhs(g, m) / (factorial(2 * g - 2 - m) * _sign(2 * g - 3 - m))


def lambda_g_ch_product(g: int, m: int) -> MumfordNormalForm:
    """ λ_g·ch_{2g-2-m}(𝔼) in Mumford normal form """
    return mumford_reduce(raw_multiply(raw_lambda(g, g), ch_raw(2 * g - 2 - m, g)), g)


class ChIntegralResult(JsonDocument):
    def __init__(self, g: int = 0, m: int = 0, rhs: Fraction = None, ch_integral: Fraction = None,
                 normal_form: str = "", monomial: Optional[str] = None, value: Fraction = None):
        super().__init__()
        self.g = g
        self.m = m
        self.rhs = rhs
        self.ch_integral = ch_integral
        self.normal_form = normal_form
        self.monomial = monomial
        self.value = value

    def get_attribute_mapping(self) -> dict:
        return {
            "g": "g",
            "m": "m",
            "rhs": "rhs",
            "ch_integral": "chIntegral",
            "normal_form": "normalForm",
            "monomial": "monomial",
            "value": "value",
        }

    def get_custom_mapping(self) -> dict:
        return {
            "g": int,
            "m": int,
            "rhs": parse_fraction,
            "ch_integral": parse_fraction,
            "value": parse_fraction,
        }

    def to_hodge_value(self) -> HodgeValue:
        integrand = self.monomial if self.monomial is not None else f"λ{self.g}·ch{2 * self.g - 2 - self.m}·ψ1^{self.m}"
        return HodgeValue(self.g, integrand, self.value, f"ch-integral formula g={self.g} m={self.m}, Mumford reduction")


def theorem32_pipeline(g: int, m: int) -> ChIntegralResult:
    """
    Turns the ch-integral formula into a λ-monomial integral where possible: a normal form c·M gives ∫Mψ^m = value/c,
    a zero normal form gives the (vanishing) ch-integral, anything else gives the ch-integral with the normal form as
    descriptor.
    :raises ConsistencyError: if the normal form vanishes but the formula does not
    """
    value = theorem32_ch_integral(g, m)
    form = lambda_g_ch_product(g, m)
    result = ChIntegralResult(g, m, theorem32_rhs(g, m), value, str(form))
    if form.is_zero():
        if value != 0:
            _logger.error(f"λ_{g}·ch_{2 * g - 2 - m} reduces to zero but its integral is {value}")
            raise ConsistencyError(f"λ_{g}·ch_{2 * g - 2 - m} vanishes, formula gives {value}")
        result.value = Fraction(0)
        return result
    single = form.single_term()
    if single is None:
        result.value = value
        return result
    coefficient, exponents = single
    result.monomial = str(LambdaMonomial(g, exponents, (m,)))
    result.value = value / coefficient
    return result


def theorem32_relation(g: int, m: int, target: Tuple[int, ...],
                       known: Dict[LambdaMonomial, Fraction] = None) -> Fraction:
    """
    Solves the unreduced expansion of ∫λ_g ch_{2g-2-m}ψ^m for one λ-monomial, given values of all other monomials.
    :param target: λ-exponent vector of the unknown monomial
    :param known: monomial values; defaults to EXTERNAL_CONSTANTS
    :raises UserInputError: if a monomial other than the target has no known value
    """
    if known is None:
        known = {monomial: constant.value for monomial, constant in EXTERNAL_CONSTANTS.items()}
    expansion = raw_multiply(raw_lambda(g, g), ch_raw(2 * g - 2 - m, g))
    target = tuple(target)
    if target not in expansion:
        raise UserInputError(f"{format_lambda_exponents(target)} does not occur in λ_{g}·ch_{2 * g - 2 - m}")
    remainder = theorem32_ch_integral(g, m)
    for exponents, coefficient in expansion.items():
        if exponents == target:
            continue
        monomial = LambdaMonomial(g, exponents, (m,))
        if monomial not in known:
            raise UserInputError(f"No value known for ∫{monomial}")
        remainder -= coefficient * known[monomial]
    return remainder / expansion[target]


def lambda1_lambdag(g: int) -> Fraction:
    """ ∫_{M_{g,1}} λ_1λ_gψ^{2g-3} = [g(2g-3)b_g + b_1b_{g-1}] / 12 """
    if g < 2:
        raise UserInputError(f"λ_1λ_g integral needs g >= 2, got {g}")
    return (g * (2 * g - 3) * b_g(g) + b_g(1) * b_g(g - 1)) / 12


@dataclass
class ProofHelpers:
    g: int
    a1: Fraction
    f1_at_1: int
    f2_at_1: Dict[int, int] = field(default_factory=dict)
    f3_at_1: int = 0
    value: Fraction = Fraction(0)


def _f1_at_1(g: int) -> int:
    return sum(_sign(2 * g - 1 - k) * comb(2 * g - 1, k) * (2 * g - 2 - k) for k in range(2 * g - 2))


def _f2_at_1(g: int, g2: int) -> int:
    return sum(_sign(2 * g2 - 1 - k) * (2 * g - 2 - k) * comb(2 * g2 - 1, k) for k in range(2 * g2))


def _f3_at_1(g: int) -> int:
    return sum(_sign(2 * g - 1 - k) * (2 * g - 2 - k) * comb(2 * g - 3, k) for k in range(2 * g - 3))


def proof_helpers_34(g: int) -> ProofHelpers:
    """
    Evaluates the binomial sums behind the λ_1λ_g formula, checks them against their closed values and recombines
    them into the integral.
    :raises ConsistencyError: if a sum differs from its closed value
    """
    if g < 2:
        raise UserInputError(f"λ_1λ_g helpers need g >= 2, got {g}")
    a1 = sum((Fraction(_sign(2 * g - 1 - k) * comb(2 * g - 1, k) * comb(2 * g - 1 - k, 2), 2 * g - 1 - k)
              for k in range(2 * g - 3)), Fraction(0))
    f1 = _f1_at_1(g)
    checks = [
        ("f1(1)", f1, 1),
        ("A1 from f1", a1, Fraction(f1 - comb(2 * g - 1, 2 * g - 3), 2)),
        ("A1", a1, -Fraction(comb(2 * g - 1, 2 * g - 3) - 1, 2)),
    ]
    f2 = {g2: _f2_at_1(g, g2) for g2 in range(1, g - 1)}
    checks.extend((f"f2(1) at g2={g2}", value, -1 if g2 == 1 else 0) for g2, value in f2.items())
    f3 = _f3_at_1(g)
    checks.append(("f3(1)", f3, -2 if g == 2 else -1))
    for name, actual, expected in checks:
        if actual != expected:
            raise ConsistencyError(f"{name} is {actual} for g={g}, expected {expected}")

    b2 = bernoulli(2)
    paired = sum((b_g(g - g2) * b_g(g2) * value for g2, value in f2.items()), Fraction(0)) / 2
    paired += b_g(1) * b_g(g - 1) * f3 / 2
    value = -b_g(g) * b2 * a1 - b2 / 2 * paired
    return ProofHelpers(g, a1, f1, f2, f3, value)


def lambda_g_linear(g: int, mu: Partition) -> Fraction:
    """
    ∫_{M_{g,n}} λ_g / Π(1 - μ_iψ_i) = |μ|^{2g+n-3} b_g. Genus 0 gives |μ|^{n-3}, which extends the formula to the
    unstable cases as the engine does.
    """
    if g < 0:
        raise UserInputError(f"Genus must be non-negative, got {g}")
    if mu.size == 0:
        raise UserInputError("Linear integrals need a nonempty partition")
    return Fraction(mu.size) ** (2 * g + mu.length - 3) * b_g(g)


def multinomial(exponents: ExponentVector) -> int:
    result = factorial(sum(exponents))
    for k in exponents:
        result //= factorial(k)
    return result


def lambda_g_conjecture(g: int, exponents: ExponentVector) -> Fraction:
    """
    ∫_{M_{g,n}} λ_g Π ψ_l^{k_l} = (2g+n-3 choose k_1, ..., k_n) b_g; zero when Σk_l misses 2g+n-3.
    """
    if g < 1:
        raise UserInputError(f"λ_g conjecture needs g >= 1, got {g}")
    exponents = tuple(exponents)
    if len(exponents) == 0:
        raise UserInputError("λ_g conjecture needs at least one marked point")
    if any(k < 0 for k in exponents):
        raise UserInputError(f"ψ-exponents must be non-negative, got {exponents}")
    n = len(exponents)
    if sum(exponents) != 2 * g + n - 3:
        _logger.warning(f"λ_{g}·ψ^{exponents} has degree {sum(exponents) + g}, dimension of M_{{{g},{n}}} is "
                        f"{3 * g - 3 + n}; the integral vanishes")
        return Fraction(0)
    return multinomial(exponents) * b_g(g)


def eq36_sides(g: int, exponents: ExponentVector) -> IdentityCheck:
    """
    (n-1)∫λ_gΠψ^{k_l} against ½ΣΣ_{i≠j} (k_i+k_j)!/(k_i!k_j!) ∫λ_gψ^{k_i+k_j-1}Π_{l≠i,j}ψ^{k_l}, both by the λ_g
    conjecture.
    """
    exponents = tuple(exponents)
    n = len(exponents)
    if n < 2:
        raise UserInputError(f"The marked-point recursion needs n >= 2, got {n}")
    lhs = (n - 1) * lambda_g_conjecture(g, exponents)
    rhs = Fraction(0)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            merged = exponents[i] + exponents[j]
            if merged == 0:
                continue
            rest = tuple(k for position, k in enumerate(exponents) if position not in (i, j))
            weight = Fraction(factorial(merged), factorial(exponents[i]) * factorial(exponents[j]))
            rhs += weight * lambda_g_conjecture(g, (merged - 1,) + rest)
    return IdentityCheck(lhs, rhs / 2)


def eq36_coefficient_identity(g: int, exponents: ExponentVector) -> IdentityCheck:
    """ ½ΣΣ_{i≠j}(k_i+k_j) against (n-1)(2g+n-3) for Σk = 2g+n-3 """
    n = len(exponents)
    total = sum(exponents[i] + exponents[j] for i in range(n) for j in range(n) if i != j)
    return IdentityCheck(Fraction(total, 2), Fraction((n - 1) * (2 * g + n - 3)))


def admissible_exponents(g: int, n: int) -> List[ExponentVector]:
    """ Exponent vectors with Σk = 2g+n-3, the ones with a nonzero λ_g integral """
    if 2 * g + n - 3 < 0:
        return []
    return compositions(2 * g + n - 3, n)


def lambda_g_recursion_32(g: int, mu: Partition) -> IdentityCheck:
    """
    (n-1)/|Aut μ|·∫λ_g/Π(1-μ_iψ_i) against Σ_{ν∈J(μ)} I_1(ν)/|Aut ν|·∫λ_g/Π(1-ν_iψ_i), both by the linear formula.
    """
    lhs = Fraction(mu.length - 1, mu.aut_order()) * lambda_g_linear(g, mu)
    rhs = sum((move.i1 / move.result.aut_order() * lambda_g_linear(g, move.result) for move in join_set(mu)),
              Fraction(0))
    return IdentityCheck(lhs, rhs)


def _split_sum(g: int, mu: Partition) -> Fraction:
    """ Σ_{g1+g2=g} Σ I_3(ν¹,ν²)/(|Aut ν¹||Aut ν²|) · L_{g1,ν¹}·L_{g2,ν²} with L the linear λ-integrals """
    total = Fraction(0)
    for move in cut_set(mu):
        for (nu1, nu2), i3 in move.splits.items():
            weight = i3 / (nu1.aut_order() * nu2.aut_order())
            for g1 in range(g + 1):
                total += weight * lambda_g_linear(g1, nu1) * lambda_g_linear(g - g1, nu2)
    return total


def theorem52_verify(g: int, mu: Partition, engine: MarinoVafaEngine = None) -> IdentityCheck:
    """
    The τ^{n-1} coefficient of the cut-and-join equation written with λ_g integrals (linear formula) and G
    combinations (engine):

        n/|Aut μ|·[(n-1+S_μ)L_μ - G_μ] = Σ_J I_1/|Aut ν|·[(n-2+S_ν)L_ν - G_ν] + Σ I_3/(|Aut ν¹||Aut ν²|)·L·L
    """
    engine = engine if engine is not None else default_engine()
    n = mu.length
    combination = engine.extract_report(g, mu).combo_value
    lhs = Fraction(n, mu.aut_order()) * ((n - 1 + harmonic_factor(mu)) * lambda_g_linear(g, mu) - combination)
    rhs = Fraction(0)
    for move in join_set(mu):
        nu = move.result
        bracket = (n - 2 + harmonic_factor(nu)) * lambda_g_linear(g, nu) - engine.extract_report(g, nu).combo_value
        rhs += move.i1 / nu.aut_order() * bracket
    return IdentityCheck(lhs, rhs + _split_sum(g, mu))


def _pair_harmonic(p: int, start: int, stop: int) -> Fraction:
    return sum((Fraction(1, a) for a in range(start, stop + 1)), Fraction(0)) * p


def theorem53_singular(mu: Partition) -> IdentityCheck:
    """
    Singular parts of the λ_g terms of the G recursion, divided by d^{2g+n-4}b_g: the right side exceeds the left by
    2(n-1)d. lhs holds [LHS]_sing + 2(n-1)d.
    """
    n = mu.length
    d = mu.size
    if n < 2:
        raise UserInputError(f"Singular-part identity needs at least two parts, got {mu}")
    parts = list(mu)
    singular = [part * harmonic(part - 1) for part in parts]
    total_singular = sum(singular, Fraction(0))
    lhs = n * total_singular * d

    rhs = Fraction(0)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            merged = parts[i] + parts[j]
            others = total_singular - singular[i] - singular[j]
            rhs += Fraction(merged, 2) * (others + merged * harmonic(merged - 1))
            rhs -= _pair_harmonic(parts[j] * merged, parts[j] + 1, merged - 1)
    rhs += total_singular * d
    return IdentityCheck(lhs + 2 * (n - 1) * d, rhs)


@lru_cache(maxsize=None)
def g_combination(g: int, mu: Partition) -> Fraction:
    """
    G_{g,μ} from the λ_g formula alone, solving the τ^{n-1} equation for G_μ; one-part partitions need no join
    terms, so the recursion runs down the number of parts. Genus 0 has no G.
    """
    if g < 0:
        raise UserInputError(f"Genus must be non-negative, got {g}")
    if mu.size == 0:
        raise UserInputError("G combinations need a nonempty partition")
    if g == 0:
        return Fraction(0)
    n = mu.length
    joins = Fraction(0)
    for move in join_set(mu):
        nu = move.result
        bracket = (n - 2 + harmonic_factor(nu)) * lambda_g_linear(g, nu) - g_combination(g, nu)
        joins += move.i1 / nu.aut_order() * bracket
    own = (n - 1 + harmonic_factor(mu)) * lambda_g_linear(g, mu)
    return own - Fraction(mu.aut_order(), n) * (joins + _split_sum(g, mu))


def lambda_gm1_psi_integrals(g: int, n: int) -> Dict[ExponentVector, Fraction]:
    """
    ∫_{M_{g,n}} λ_{g-1} Π ψ_i^{k_i} for all exponent vectors with Σk = 2g-2+n, as the top homogeneous part of G_{g,μ}
    in μ, extracted by forward differences over μ = 1 + x.
    :raises InterpolationError: if G does not behave like a polynomial of degree 2g-2+n
    """
    if g < 1:
        raise UserInputError(f"λ_(g-1) integrals need g >= 1, got {g}")
    if n < 1:
        raise UserInputError(f"λ_(g-1) integrals need n >= 1, got {n}")
    return _lambda_gm1_table(g, n)


@lru_cache(maxsize=None)
def _lambda_gm1_table(g: int, n: int) -> Dict[ExponentVector, Fraction]:
    degree = 2 * g - 2 + n
    table = top_homogeneous_part(lambda x: g_combination(g, Partition(1 + entry for entry in x)), n, degree)
    _logger.debug(f"Extracted {len(table)} λ_{g - 1} integrals on M_{{{g},{n}}}")
    return table


def lambda_gm1_recursion(g: int, mu: Partition) -> Fraction:
    """
    The homogeneous degree-(2g-2+n) part of G_{g,μ}, i.e. ∫ λ_{g-1} / Π(1 - μ_iψ_i) evaluated at μ.
    """
    if mu.size == 0:
        raise UserInputError("λ_(g-1) integrals need a nonempty partition")
    total = Fraction(0)
    for exponents, value in lambda_gm1_psi_integrals(g, mu.length).items():
        term = value
        for part, k in zip(mu, exponents):
            term *= Fraction(part) ** k
        total += term
    return total


def lambda_gm1_one_point(g: int) -> Fraction:
    """ ∫_{M_{g,1}} λ_{g-1} ψ^{2g-1} """
    return lambda_gm1_psi_integrals(g, 1)[(2 * g - 1,)]


def lhs_polynomial_in_d(g: int, engine: MarinoVafaEngine = None, check_points: int = 0) -> List[Fraction]:
    """
    Coefficients in d (lowest first) of P'_{g,(d)}(0) = -G_{g,(d)}, a polynomial of degree 2g-1, interpolated from the
    engine at d = 1..2g. The d^m coefficient is the ch-integral formula for 1 <= m <= 2g-3 and the d^{2g-1}
    coefficient is -∫λ_{g-1}ψ^{2g-1}.
    :param check_points: additional values of d that must lie on the polynomial
    """
    if g < 1:
        raise UserInputError(f"Polynomial in d needs g >= 1, got {g}")
    engine = engine if engine is not None else default_engine()

    def derivative(d: int) -> Fraction:
        return engine.hodge_polynomial(g, Partition([d])).derivative_at_zero

    points = list(range(1, 2 * g + 1 + check_points))
    if check_points > 0:
        return interpolate(derivative, points, 2 * g - 1)
    return newton_coefficients(points, [derivative(d) for d in points])


def theorem31_engine_series(d: int, max_order: int, engine: MarinoVafaEngine = None) -> LaurentSeries:
    """
    Σ_{g>=1} λ^{2g} P'_{g,(d)}(0) up to λ^max_order. The genus 0 term is the unstable convention and left out.
    """
    engine = engine if engine is not None else default_engine()
    coefficients = [Fraction(0)] * (max_order + 1)
    for g in range(1, max_order // 2 + 1):
        coefficients[2 * g] = engine.hodge_polynomial(g, Partition([d])).derivative_at_zero
    return LaurentSeries(0, coefficients, max_order)


def theorem31_sides(d: int, max_order: int, engine: MarinoVafaEngine = None) -> IdentityCheck:
    """ Engine series against the trigonometric side, compared on λ^1..λ^max_order """
    engine_side = theorem31_engine_series(d, max_order, engine)
    trig_side = theorem31_trig_side(d, max_order)
    orders = range(1, max_order + 1)
    return IdentityCheck([engine_side.coefficient(k) for k in orders], [trig_side.coefficient(k) for k in orders])


def eq26_sides(d: int, max_order: int) -> IdentityCheck:
    """ Σ_{i+j=d} λ²/(8 sin(iλ/2) sin(jλ/2)) by series arithmetic against ½Σ λ^{2g} Σ b b F """
    series = pair_sine_series(d, max_order)
    via_bg = pair_sine_via_bg(d, max_order)
    orders = range(max_order + 1)
    return IdentityCheck([series.coefficient(k) for k in orders], [via_bg.coefficient(k) for k in orders])
