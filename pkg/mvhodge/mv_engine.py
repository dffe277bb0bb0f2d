"""
Representation side of the Mariño-Vafa formula, evaluated exactly.

The disconnected generating function has p_μ coefficient Σ_ν χ_ν(C(μ))/z_μ · e^{i(τ+½)κ_νλ/2} · V_ν(λ); its logarithm
has p_μ coefficient Σ_g λ^{2g-2+l(μ)} 𝒞_{g,μ}(τ). Dividing 𝒞_{g,μ}(τ) by the known prefactor leaves the polynomial

    P_{g,μ}(τ) = ∫_{M_{g,l(μ)}} Λ∨_g(1)Λ∨_g(-τ-1)Λ∨_g(τ) / Π(1 - μ_iψ_i)

whose constant term is the λ_g integral and whose linear term is minus the λ_{g-1} combination.
"""

import os
from fractions import Fraction
from functools import lru_cache
from math import factorial
from threading import Lock
from typing import Dict, Iterable, List, Optional, Tuple
from mvhodge.app_config import EngineConfig
from mvhodge.bernoulli import inverse_double_sine
from mvhodge.characters import class_characters
from mvhodge.errors import ConsistencyError, ImaginaryResidueError, InexactDivisionError, TruncationError, \
    UserInputError
from mvhodge.files import cache_file_name, ensure_directory, read_json, write_json
from mvhodge.gaussian import GaussianRational, i_power
from mvhodge.json_document import JsonDocument, parse_fraction, parse_partition
from mvhodge.laurent_series import LaurentSeries, exp_series, sine_series
from mvhodge.logger import Logger
from mvhodge.p_series import PSeries, downward_closure, series_log
from mvhodge.partition import Partition, EMPTY_PARTITION, partitions_up_to
from mvhodge.performance_logger import PerformanceLogger
from mvhodge.tau_polynomial import TauPolynomial, TAU, ONE_POLYNOMIAL, ZERO_POLYNOMIAL, tau_exact_div

# i(τ + 1/2)
TWISTED_TAU = TauPolynomial([GaussianRational(0, Fraction(1, 2)), GaussianRational(0, 1)])


class HodgePolynomial(JsonDocument):
    """
    The τ-polynomial P_{g,μ}(τ) with rational coefficients, lowest degree first. conventional marks the unstable
    cases (g, l(μ)) = (0, 1), (0, 2), where the value |μ|^{l(μ)-3} is a convention.
    """

    def __init__(self, g: int = 0, mu: Partition = EMPTY_PARTITION, coefficients: List[Fraction] = None,
                 order: int = 0):
        super().__init__()
        self.g = g
        self.mu = mu
        self.coefficients = coefficients if coefficients is not None else []
        self.order = order
        self.conventional = g == 0 and mu.length in (1, 2)

    def get_attribute_mapping(self) -> dict:
        return {
            "g": "g",
            "mu": "mu",
            "coefficients": "coefficients",
            "order": "order",
            "conventional": "conventional",
        }

    def get_custom_mapping(self) -> dict:
        return {
            "g": int,
            "mu": parse_partition,
            "coefficients": parse_fraction,
            "order": int,
        }

    def polynomial(self) -> TauPolynomial:
        return TauPolynomial(self.coefficients)

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    @property
    def lambda_g_integral(self) -> Fraction:
        """ P(0), the integral of λ_g / Π(1 - μ_iψ_i) """
        return self.coefficient(0)

    @property
    def derivative_at_zero(self) -> Fraction:
        return self.coefficient(1)

    def to_series_json(self) -> dict:
        """ Dump format of the series command: exact numerators and denominators as strings """
        return {
            "mu": str(self.mu),
            "g": self.g,
            "tau_coefficients": [[str(c.numerator), str(c.denominator)] for c in self.coefficients],
        }


class ExtractionReport(JsonDocument):
    def __init__(self, g: int = 0, mu: Partition = EMPTY_PARTITION, lambda_g_value: Fraction = None,
                 combo_value: Fraction = None, polynomial: HodgePolynomial = None):
        super().__init__()
        self.g = g
        self.mu = mu
        self.lambda_g_value = lambda_g_value
        self.combo_value = combo_value
        self.polynomial = polynomial

    def get_attribute_mapping(self) -> dict:
        return {
            "g": "g",
            "mu": "mu",
            "lambda_g_value": "lambdaG",
            "combo_value": "combination",
            "polynomial": "polynomial",
        }

    def get_custom_mapping(self) -> dict:
        return {
            "g": int,
            "mu": parse_partition,
            "lambda_g_value": parse_fraction,
            "combo_value": parse_fraction,
            "polynomial": HodgePolynomial,
        }


@lru_cache(maxsize=None)
def v_nu(nu: Partition, order: int) -> LaurentSeries:
    """
    V_ν(λ) = 1 / Π_{x∈ν} 2 sin(h(x)λ/2) up to λ^order; the pole has order |ν| with leading coefficient Π 1/h(x).
    """
    if nu.size == 0:
        raise UserInputError("V_ν needs a nonempty partition")
    result = None
    for hook in nu.hook_lengths():
        factor = inverse_double_sine(hook, order + nu.size)
        result = factor if result is None else result * factor
    return result.truncate(order)


def v_nu_double_product(nu: Partition, order: int) -> LaurentSeries:
    """
    V_ν(λ) from the product over pairs of rows and cells, using sine series only.
    """
    if nu.size == 0:
        raise UserInputError("V_ν needs a nonempty partition")
    working = order + nu.size + 1
    length = nu.length
    numerator = LaurentSeries.constant(1, working)
    denominator = LaurentSeries.constant(1, working)
    for a in range(1, length + 1):
        for b in range(a + 1, length + 1):
            numerator = numerator * sine_series(Fraction(nu[a - 1] - nu[b - 1] + b - a, 2), working)
            denominator = denominator * sine_series(Fraction(b - a, 2), working)
    for i in range(1, length + 1):
        for v in range(1, nu[i - 1] + 1):
            denominator = denominator * sine_series(Fraction(v - i + length, 2), working) * 2
    result = numerator * denominator.invert()
    if result.max_order < order:
        raise TruncationError(f"Double product for V_{nu} only reached λ^{result.max_order}")
    return result.truncate(order)


def harmonic_factor(mu: Partition) -> Fraction:
    """ Σ_i Σ_{a=1}^{μ_i-1} μ_i/a, the linear coefficient of Π_i Π_a (μ_iτ+a)/(μ_i-1)! """
    return sum((Fraction(part, a) for part in mu for a in range(1, part)), Fraction(0))


def part_product(mu: Partition) -> TauPolynomial:
    """ Π_i Π_{a=1}^{μ_i-1} (μ_iτ + a) / (μ_i - 1)! """
    result = ONE_POLYNOMIAL
    for part in mu:
        for a in range(1, part):
            result = result * TauPolynomial([a, part])
        result = result / factorial(part - 1)
    return result


def mv_prefactor(mu: Partition) -> TauPolynomial:
    """ -i^{|μ|+l(μ)}/|Aut(μ)| · [τ(τ+1)]^{l(μ)-1} · Π_i Π_a (μ_iτ+a)/(μ_i-1)! """
    scalar = -i_power(mu.size + mu.length) * Fraction(1, mu.aut_order())
    return (TAU * (TAU + 1)) ** (mu.length - 1) * part_product(mu) * scalar


def bracket_constant(mu: Partition) -> GaussianRational:
    """ -i^{d+n}/|Aut(μ)|, the common factor of the bracket identities """
    return -i_power(mu.size + mu.length) * Fraction(1, mu.aut_order())


def required_order(g: int, mu: Partition) -> int:
    return 2 * g - 2 + mu.length


@lru_cache(maxsize=None)
def _kappa_exponential(kappa: int, max_order: int) -> LaurentSeries:
    return exp_series(TWISTED_TAU * Fraction(kappa, 2), max_order)


def disconnected_coefficient(mu: Partition, max_order: int):
    """
    p_μ coefficient of the disconnected series up to λ^max_order, with τ-polynomial coefficients. The empty
    partition has coefficient 1.
    """
    if mu.size == 0:
        return Fraction(1)
    total = LaurentSeries.zero(max_order)
    z = mu.z_factor()
    for nu, chi in class_characters(mu).items():
        if chi == 0:
            continue
        term = _kappa_exponential(nu.kappa(), max_order + nu.size) * v_nu(nu, max_order)
        total = total + term * Fraction(chi, z)
    return total


def disconnected_series(d_max: int, lambda_order: int, support=None) -> PSeries:
    """
    The disconnected series with every p_μ coefficient known up to λ^lambda_order.
    """
    if d_max < 1:
        raise UserInputError(f"d_max must be positive, got {d_max}")
    keys = partitions_up_to(d_max) if support is None else [mu for mu in support if mu.size > 0]
    terms = {mu: disconnected_coefficient(mu, lambda_order) for mu in keys}
    terms[EMPTY_PARTITION] = Fraction(1)
    return PSeries(terms, d_max, support)


def connected_series(d_max: int, lambda_order: int, support=None) -> PSeries:
    """
    The logarithm of the disconnected series. Poles of the factors lower the precision of products, coefficients
    beyond the resulting precision raise TruncationError when requested.
    """
    return series_log(disconnected_series(d_max, lambda_order, support))


def _as_polynomial(value) -> TauPolynomial:
    if isinstance(value, TauPolynomial):
        return value
    return TauPolynomial.constant(value)


class HodgeCache:
    """
    Session cache of hodge polynomials keyed by (g, μ), optionally persisted as JSON files in a directory.
    """

    def __init__(self, directory: Optional[str] = None):
        self.logger = Logger(self.__class__.__name__)
        self.directory = directory
        self._entries: Dict[Tuple[int, Partition], HodgePolynomial] = {}
        self._lock = Lock()
        if directory is not None:
            ensure_directory(directory)

    def _path(self, g: int, mu: Partition, order: int) -> str:
        return os.path.join(self.directory, cache_file_name(g, mu, order))

    def get(self, g: int, mu: Partition, order: int) -> Optional[HodgePolynomial]:
        with self._lock:
            entry = self._entries.get((g, mu))
        if entry is not None:
            return entry
        if self.directory is None:
            return None
        data = read_json(self._path(g, mu, order))
        if data is None:
            self.logger.debug(f"Cache miss for g={g}, mu={mu}")
            return None
        entry = HodgePolynomial.from_json(data)
        with self._lock:
            self._entries[(g, mu)] = entry
        return entry

    def put(self, polynomial: HodgePolynomial):
        with self._lock:
            self._entries[(polynomial.g, polynomial.mu)] = polynomial
        if self.directory is not None:
            write_json(polynomial.to_json(), self._path(polynomial.g, polynomial.mu, polynomial.order))

    def __len__(self):
        return len(self._entries)


class MarinoVafaEngine:
    """
    Computes connected coefficients 𝒞_{g,μ}(τ) and the hodge polynomials P_{g,μ}(τ) from characters and hook
    lengths. Each connected coefficient is obtained from the logarithm restricted to the sub-multisets of μ, with
    the disconnected coefficient of ρ taken to λ-order (target + |μ| - |ρ|) so the poles of the factors are
    compensated exactly.
    """

    def __init__(self, guard: Optional[int] = None, cache: Optional[HodgeCache] = None,
                 config: Optional[EngineConfig] = None, recheck: Optional[bool] = None):
        self.logger = Logger(self.__class__.__name__)
        if guard is None or cache is None or recheck is None:
            config = config if config is not None else EngineConfig()
        self.guard = guard if guard is not None else config.lambda_guard
        if self.guard < 0:
            raise UserInputError(f"Guard order must be non-negative, got {self.guard}")
        self.cache = cache if cache is not None else HodgeCache(config.cache_dir)
        # recompute every new polynomial one λ-order higher
        self.recheck_orders = recheck if recheck is not None else config.recheck
        self._connected: Dict[Partition, LaurentSeries] = {}
        self._lock = Lock()

    def _connected_for(self, mu: Partition, max_order: int) -> LaurentSeries:
        with self._lock:
            known = self._connected.get(mu)
        if known is not None and known.max_order >= max_order:
            return known

        perf = PerformanceLogger(self.logger)
        support = downward_closure([mu])
        terms = {EMPTY_PARTITION: Fraction(1)}
        for rho in support:
            if rho.size > 0:
                terms[rho] = disconnected_coefficient(rho, max_order + mu.size - rho.size)
        connected = series_log(PSeries(terms, mu.size, support))
        perf.finish(f"Connected series for mu={mu} to order {max_order} ({len(support)} keys)")

        with self._lock:
            for rho in support:
                if rho.size == 0:
                    continue
                value = connected.coefficient(rho)
                if not isinstance(value, LaurentSeries):
                    value = LaurentSeries.zero(max_order + mu.size - rho.size)
                current = self._connected.get(rho)
                if current is None or current.max_order < value.max_order:
                    self._connected[rho] = value
            return self._connected[mu]

    def order_for(self, g: int, mu: Partition) -> int:
        return required_order(g, mu) + self.guard

    def connected_coefficient(self, g: int, mu: Partition, max_order: Optional[int] = None) -> TauPolynomial:
        """
        𝒞_{g,μ}(τ), the λ^{2g-2+l(μ)} coefficient of the connected series; zero for negative genus.
        """
        if g < 0:
            return ZERO_POLYNOMIAL
        if mu.size == 0:
            raise UserInputError("Connected coefficients are indexed by nonempty partitions")
        order = self.order_for(g, mu) if max_order is None else max_order
        series = self._connected_for(mu, order)
        return _as_polynomial(series.coefficient(required_order(g, mu)))

    def connected_series(self, d_max: int, lambda_order: int) -> PSeries:
        return connected_series(d_max, lambda_order)

    def disconnected_series(self, d_max: int, lambda_order: int) -> PSeries:
        return disconnected_series(d_max, lambda_order)

    def _divide(self, g: int, mu: Partition, connected: TauPolynomial, order: int) -> HodgePolynomial:
        try:
            quotient = tau_exact_div(connected, mv_prefactor(mu))
        except InexactDivisionError as ide:
            self.logger.error(f"Prefactor division inexact for g={g}, mu={mu}: remainder {ide.remainder}")
            raise
        if not quotient.is_real():
            self.logger.error(f"Imaginary residue for g={g}, mu={mu}: {quotient}")
            raise ImaginaryResidueError(f"P_{{{g},{mu}}}(τ) = {quotient} is not real")
        return HodgePolynomial(g, mu, quotient.real_coefficients(), order)

    def hodge_polynomial(self, g: int, mu: Partition) -> HodgePolynomial:
        """
        P_{g,μ}(τ) = 𝒞_{g,μ}(τ) / prefactor, checked to be an exact division with real quotient.
        :raises InexactDivisionError: if the prefactor does not divide 𝒞_{g,μ}
        :raises ImaginaryResidueError: if the quotient has imaginary coefficients
        """
        if g < 0:
            raise UserInputError(f"Genus must be non-negative, got {g}")
        order = self.order_for(g, mu)
        cached = self.cache.get(g, mu, order)
        if cached is not None:
            return cached
        result = self._divide(g, mu, self.connected_coefficient(g, mu), order)
        if self.recheck_orders:
            self._compare_one_order_higher(result)
        self.cache.put(result)
        return result

    def extract_report(self, g: int, mu: Partition) -> ExtractionReport:
        """
        Solves [𝒞]_{n-1} = c·L and [𝒞]_n = c·(n-1+S)·L - c·G for the λ_g integral L and the combination G, with
        c = -i^{d+n}/|Aut(μ)| and S the harmonic factor, and checks both against P(0) and -P'(0).
        """
        polynomial = self.hodge_polynomial(g, mu)
        connected = self.connected_coefficient(g, mu)
        n = mu.length
        c = bracket_constant(mu)
        lambda_g = connected.coefficient(n - 1) / c
        combo = lambda_g * (n - 1 + harmonic_factor(mu)) - connected.coefficient(n) / c
        if not (lambda_g.is_real() and combo.is_real()):
            raise ImaginaryResidueError(f"Bracket extraction for g={g}, mu={mu} is not real")
        if lambda_g.re != polynomial.coefficient(0) or combo.re != -polynomial.coefficient(1):
            raise ConsistencyError(f"Bracket extraction for g={g}, mu={mu} disagrees with P(τ)")
        return ExtractionReport(g, mu, lambda_g.re, combo.re, polynomial)

    def recheck(self, g: int, mu: Partition) -> HodgePolynomial:
        """
        Recomputes P_{g,μ} one λ-order higher from scratch and compares.
        :raises TruncationError: if the two computations disagree
        """
        reference = self.hodge_polynomial(g, mu)
        self._compare_one_order_higher(reference)
        return reference

    def _compare_one_order_higher(self, reference: HodgePolynomial):
        g, mu = reference.g, reference.mu
        order = self.order_for(g, mu) + 1
        fresh = MarinoVafaEngine(guard=self.guard + 1, cache=HodgeCache(), recheck=False)
        again = fresh._divide(g, mu, fresh.connected_coefficient(g, mu, order), order)
        if again.coefficients != reference.coefficients:
            self.logger.error(f"Guard recheck failed for g={g}, mu={mu}")
            raise TruncationError(f"P_{{{g},{mu}}} changed when raising the λ-order to {order}")

    def warm(self, targets: Iterable[Tuple[int, Partition]]) -> List[HodgePolynomial]:
        return [self.hodge_polynomial(g, mu) for g, mu in targets]


_DEFAULT_ENGINE: Optional[MarinoVafaEngine] = None
_DEFAULT_LOCK = Lock()


def default_engine() -> MarinoVafaEngine:
    global _DEFAULT_ENGINE
    with _DEFAULT_LOCK:
        if _DEFAULT_ENGINE is None:
            _DEFAULT_ENGINE = MarinoVafaEngine()
        return _DEFAULT_ENGINE


def hodge_polynomial(g: int, mu: Partition) -> HodgePolynomial:
    return default_engine().hodge_polynomial(g, mu)


def extract_report(g: int, mu: Partition) -> ExtractionReport:
    return default_engine().extract_report(g, mu)
