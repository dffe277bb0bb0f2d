import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional, Tuple
from mvhodge.app_config import EngineConfig
from mvhodge.bernoulli import F_0g_bernoulli_part, F_brute, F_closed, harmonic
from mvhodge.constant_listing import IdentityName
from mvhodge.cut_join import differential_equation_residual
from mvhodge.errors import UserInputError
from mvhodge.identities import IdentityCheck, admissible_exponents, eq26_sides, eq36_coefficient_identity, \
    eq36_sides, lambda_g_linear, lambda_g_recursion_32, lambda_gm1_one_point, lhs_polynomial_in_d, theorem31_sides, \
    theorem32_rhs, theorem52_verify, theorem53_singular
from mvhodge.json_document import JsonDocument, list_to_json
from mvhodge.logger import Logger
from mvhodge.mumford import chern_product_coefficients, ch_to_lambda, mumford_reduce, newton_power_sum
from mvhodge.mv_engine import MarinoVafaEngine, v_nu, v_nu_double_product
from mvhodge.partition import Partition, partitions_up_to
from mvhodge.performance_logger import PerformanceLogger

CaseFunction = Callable[[], IdentityCheck]


class VerificationReport(JsonDocument):
    def __init__(self, identity: str = "", parameters: dict = None, lhs=None, rhs=None, passed: bool = False,
                 elapsed_ms: int = 0, note: str = ""):
        super().__init__()
        self.identity = identity
        self.parameters = parameters if parameters is not None else {}
        self.lhs = lhs
        self.rhs = rhs
        self.passed = passed
        self.elapsed_ms = elapsed_ms
        self.note = note

    def get_attribute_mapping(self) -> dict:
        return {
            "identity": "identity",
            "parameters": "parameters",
            "lhs": "lhs",
            "rhs": "rhs",
            "passed": "pass",
            "elapsed_ms": "elapsed_ms",
            "note": "note",
        }

    def get_custom_mapping(self) -> dict:
        return {
            "elapsed_ms": int,
        }

    def sort_key(self) -> Tuple:
        key = []
        for name, value in sorted(self.parameters.items()):
            if isinstance(value, int):
                key.append((name, 0, value, ""))
            elif isinstance(value, Partition):
                key.append((name, 1, value.size, str(value)))
            else:
                key.append((name, 2, 0, str(value)))
        return tuple(key)


class SuiteResult(JsonDocument):
    def __init__(self, identity: str = "", reports: List[VerificationReport] = None, elapsed_ms: int = 0):
        super().__init__()
        self.identity = identity
        self.reports = reports if reports is not None else []
        self.elapsed_ms = elapsed_ms

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def first_failure(self) -> Optional[VerificationReport]:
        return next((report for report in self.reports if not report.passed), None)

    def get_attribute_mapping(self) -> dict:
        return {
            "identity": "identity",
            "reports": "reports",
            "elapsed_ms": "elapsed_ms",
        }

    def get_custom_mapping(self) -> dict:
        return {
            "reports": VerificationReport,
            "elapsed_ms": int,
        }

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "pass": self.passed,
            "cases": len(self.reports),
            "elapsed_ms": self.elapsed_ms,
            "firstFailure": None if self.first_failure is None else self.first_failure.to_json(),
            "reports": list_to_json(self.reports),
        }


@dataclass(frozen=True)
class VerificationRange:
    g_max: int = 2
    d_max: int = 4
    n_max: int = 5
    order: int = 6
    seed: int = 0

    def __post_init__(self):
        for name in ("g_max", "d_max", "n_max", "order"):
            if getattr(self, name) < 0:
                raise UserInputError(f"{name} must be non-negative, got {getattr(self, name)}")


class Verifier:
    """
    Runs the identity suites over a parameter range. Cases run on a thread pool of MVHODGE_WORKERS threads; reports
    are sorted by their parameters so the output does not depend on scheduling.
    """

    def __init__(self, engine: MarinoVafaEngine = None, config: EngineConfig = None, workers: Optional[int] = None):
        self.logger = Logger(self.__class__.__name__)
        if engine is None or workers is None:
            config = config if config is not None else EngineConfig()
        self.engine = engine if engine is not None else MarinoVafaEngine(config=config)
        self.workers = workers if workers is not None else config.workers
        self._suites: Dict[str, Callable[[VerificationRange], List[Tuple[dict, CaseFunction]]]] = {
            IdentityName.MUMFORD: self._mumford_cases,
            IdentityName.EQ26: self._eq26_cases,
            IdentityName.EQ31: self._eq31_cases,
            IdentityName.EQ32: self._eq32_cases,
            IdentityName.EQ36: self._eq36_cases,
            IdentityName.THM31: self._thm31_cases,
            IdentityName.THM52: self._thm52_cases,
            IdentityName.THM53: self._thm53_cases,
            IdentityName.THM41_VS_ENGINE: self._thm41_cases,
            IdentityName.THM32_VS_ENGINE: self._thm32_cases,
            IdentityName.VNU_EQUIVALENCE: self._vnu_cases,
            IdentityName.F_CLOSED_VS_BRUTE: self._f_closed_cases,
        }

    def identities(self) -> List[str]:
        return sorted(self._suites)

    def run(self, identity: str, verification_range: VerificationRange = VerificationRange()) -> SuiteResult:
        """
        :raises UserInputError: if the identity is unknown
        """
        if identity not in self._suites:
            raise UserInputError(f"Unknown identity '{identity}', choose one of {', '.join(self.identities())}")
        perf = PerformanceLogger(self.logger)
        cases = self._suites[identity](verification_range)

        def evaluate(case: Tuple[dict, CaseFunction]) -> VerificationReport:
            parameters, fn = case
            case_perf = PerformanceLogger()
            check = fn()
            return VerificationReport(identity, parameters, check.lhs, check.rhs, check.passed,
                                      case_perf.elapsed_ms(), check.note)

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                reports = list(executor.map(evaluate, cases))
        else:
            reports = [evaluate(case) for case in cases]
        reports.sort(key=VerificationReport.sort_key)

        result = SuiteResult(identity, reports, perf.elapsed_ms())
        failures = sum(1 for report in reports if not report.passed)
        perf.finish(f"Suite {identity} with {len(reports)} cases")
        if failures > 0:
            self.logger.warning(f"Suite {identity}: {failures} of {len(reports)} cases failed, first at "
                                f"{result.first_failure.parameters}")
        else:
            self.logger.info(f"Suite {identity}: all {len(reports)} cases passed")
        return result

    def run_all(self, verification_range: VerificationRange = VerificationRange()) -> List[SuiteResult]:
        return [self.run(identity, verification_range) for identity in self.identities()]

    @staticmethod
    def _mumford_cases(vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        cases = []
        for g in range(1, max(vr.g_max, 1) + 1):
            def chern_product(genus=g) -> IdentityCheck:
                coefficients = chern_product_coefficients(genus)
                expected = [Fraction((-1) ** genus) if m == 0 else Fraction(0) for m in sorted(coefficients)]
                return IdentityCheck([coefficients[m] for m in sorted(coefficients)], expected)

            cases.append(({"check": "chern-product", "g": g}, chern_product))
            for n in range(1, 2 * g + 2):
                def newton(genus=g, index=n) -> IdentityCheck:
                    expected = ch_to_lambda(index, genus) * factorial(index)
                    return IdentityCheck(newton_power_sum(index, genus), expected)

                cases.append(({"check": "newton", "g": g, "n": n}, newton))

            def idempotent(genus=g) -> IdentityCheck:
                rng = random.Random(vr.seed + genus)
                combination = {}
                for _ in range(6):
                    exponents = tuple(rng.randint(0, 3) for _ in range(genus))
                    combination[exponents] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                once = mumford_reduce(combination, genus)
                return IdentityCheck(mumford_reduce(once.terms, genus), once)

            cases.append(({"check": "idempotent", "g": g}, idempotent))
        return cases

    @staticmethod
    def _eq26_cases(vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        return [({"d": d, "order": vr.order}, lambda d=d: eq26_sides(d, vr.order)) for d in range(2, vr.d_max + 1)]

    def _eq31_cases(self, vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        coefficient_fn = self.engine.connected_coefficient
        targets = [(g, mu) for g in range(vr.g_max + 1) for mu in partitions_up_to(vr.d_max)]
        cases = []
        for g, mu in targets:
            def residual(genus=g, partition=mu) -> IdentityCheck:
                return IdentityCheck(differential_equation_residual(genus, partition, coefficient_fn), Fraction(0))

            cases.append(({"g": g, "mu": mu}, residual))

        def control() -> IdentityCheck:
            # a perturbed I_3 must break the equation somewhere in range
            broken = [(g, str(mu)) for g, mu in targets
                      if differential_equation_residual(g, mu, coefficient_fn, i3_scale=2) != 0]
            return IdentityCheck(len(broken) > 0, True, f"perturbed I3 fails at {len(broken)} of {len(targets)} cases")

        cases.append(({"g": "control", "mu": "i3-scaled-by-2"}, control))
        return cases

    @staticmethod
    def _eq32_cases(vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        return [({"g": g, "mu": mu}, lambda g=g, mu=mu: lambda_g_recursion_32(g, mu))
                for g in range(1, vr.g_max + 1) for mu in partitions_up_to(vr.d_max) if mu.length >= 2]

    @staticmethod
    def _eq36_cases(vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        cases = []
        for g in range(1, vr.g_max + 1):
            for n in range(2, vr.n_max + 1):
                for exponents in admissible_exponents(g, n):
                    label = ",".join(str(k) for k in exponents)
                    cases.append(({"check": "recursion", "g": g, "k": label},
                                  lambda g=g, k=exponents: eq36_sides(g, k)))
                    cases.append(({"check": "coefficient", "g": g, "k": label},
                                  lambda g=g, k=exponents: eq36_coefficient_identity(g, k)))
        return cases

    def _thm31_cases(self, vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        return [({"d": d, "order": vr.order}, lambda d=d: theorem31_sides(d, vr.order, self.engine))
                for d in range(1, vr.d_max + 1)]

    def _thm52_cases(self, vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        return [({"g": g, "mu": mu}, lambda g=g, mu=mu: theorem52_verify(g, mu, self.engine))
                for g in range(vr.g_max + 1) for mu in partitions_up_to(vr.d_max)]

    @staticmethod
    def _thm53_cases(vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        return [({"mu": mu}, lambda mu=mu: theorem53_singular(mu))
                for mu in partitions_up_to(vr.d_max) if 2 <= mu.length <= vr.n_max]

    def _thm41_cases(self, vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        def case(g, mu) -> IdentityCheck:
            return IdentityCheck(self.engine.extract_report(g, mu).lambda_g_value, lambda_g_linear(g, mu))

        return [({"g": g, "mu": mu}, lambda g=g, mu=mu: case(g, mu))
                for g in range(1, vr.g_max + 1) for mu in partitions_up_to(vr.d_max)]

    def _thm32_cases(self, vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        cases = []
        for g in range(2, vr.g_max + 1):
            for m in range(1, 2 * g - 2):
                def coefficient(genus=g, power=m) -> IdentityCheck:
                    return IdentityCheck(lhs_polynomial_in_d(genus, self.engine)[power], theorem32_rhs(genus, power))

                cases.append(({"g": g, "m": m}, coefficient))

        for g in range(1, vr.g_max + 1):
            def top(genus=g) -> IdentityCheck:
                return IdentityCheck(lhs_polynomial_in_d(genus, self.engine)[2 * genus - 1],
                                     -lambda_gm1_one_point(genus), "top coefficient against the λ_(g-1) recursion")

            cases.append(({"g": g, "m": 2 * g - 1}, top))
        return cases

    @staticmethod
    def _vnu_cases(vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        def case(nu) -> IdentityCheck:
            orders = range(-nu.size, vr.order + 1)
            hooks = v_nu(nu, vr.order)
            product = v_nu_double_product(nu, vr.order)
            return IdentityCheck([hooks.coefficient(k) for k in orders], [product.coefficient(k) for k in orders])

        return [({"nu": nu, "order": vr.order}, lambda nu=nu: case(nu)) for nu in partitions_up_to(vr.d_max)]

    @staticmethod
    def _f_closed_cases(vr: VerificationRange) -> List[Tuple[dict, CaseFunction]]:
        cases = []
        for g1 in range(1, vr.g_max + 1):
            for g2 in range(1, vr.g_max + 1):
                for d in range(2, vr.d_max + 1):
                    cases.append(({"g1": g1, "g2": g2, "d": d},
                                  lambda g1=g1, g2=g2, d=d: IdentityCheck(F_closed(g1, g2, d), F_brute(g1, g2, d))))
        for g in range(1, vr.g_max + 1):
            for d in range(2, vr.d_max + 1):
                def polynomial_part(genus=g, degree=d) -> IdentityCheck:
                    brute = F_brute(0, genus, degree) - Fraction(degree) ** (2 * genus - 1) * harmonic(degree - 1)
                    return IdentityCheck(brute, F_0g_bernoulli_part(genus, degree), "harmonic split of F_(0,g)")

                cases.append(({"g1": 0, "g2": g, "d": d}, polynomial_part))
                cases.append(({"g1": g, "g2": 0, "d": d},
                              lambda g=g, d=d: IdentityCheck(F_brute(g, 0, d), F_brute(0, g, d), "symmetry")))
        return cases
