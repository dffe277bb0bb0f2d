import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
from mvhodge.app_config import EngineConfig
from mvhodge.constant_listing import ExitCode, IdentityName, TableFamily
from mvhodge.errors import ConsistencyError, UserInputError
from mvhodge.gaussian import format_fraction
from mvhodge.identities import HodgeValue, check_dimension, lambda1_lambdag, lambda_g_conjecture, lambda_g_linear, \
    lambda_gm1_psi_integrals, lambda_gm1_recursion, theorem32_pipeline
from mvhodge.logger import Logger
from mvhodge.mv_engine import MarinoVafaEngine
from mvhodge.partition import EMPTY_PARTITION, Partition
from mvhodge.tables import OUTPUT_JSON, OUTPUT_TEXT, render_table, table_frame
from mvhodge.verification import VerificationRange, Verifier

COMMAND_INTEGRAL = "integral"
COMMAND_VERIFY = "verify"
COMMAND_TABLE = "table"
COMMAND_SERIES = "series"

KIND_LAMBDA_G = "lambda-g"
KIND_LINEAR = "linear"
KIND_LAMBDA1_LAMBDAG = "lambda1-lambdag"
KIND_THM32 = "thm32"
KIND_LAMBDA_GM1 = "lambda-gm1"

_logger = Logger("mvhodge")


def _parse_exponents(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        exponents = tuple(int(token) for token in text.split(","))
    except ValueError as ve:
        raise UserInputError(f"Cannot parse ψ-exponents from '{text}', expected e.g. 2,0,1") from ve
    if any(k < 0 for k in exponents):
        raise UserInputError(f"ψ-exponents must be non-negative, got {text}")
    return exponents


def _psi_text(exponents: Sequence[int]) -> str:
    return "·".join(f"ψ{index + 1}^{k}" for index, k in enumerate(exponents) if k > 0) or "1"


@dataclass(frozen=True)
class JobSpec:
    """
    A parsed and validated command line. Built by from_args before anything is computed.
    """
    command: str
    kind: Optional[str] = None
    g: Optional[int] = None
    mu: Partition = EMPTY_PARTITION
    psi: Optional[Tuple[int, ...]] = None
    m: Optional[int] = None
    use_engine: bool = False
    identity: Optional[str] = None
    family: Optional[str] = None
    output_format: str = OUTPUT_TEXT
    verification_range: VerificationRange = VerificationRange()
    g_min: int = 0
    m_max: int = 12
    guard: Optional[int] = None
    workers: Optional[int] = None
    recheck: bool = False

    @staticmethod
    def from_args(args: argparse.Namespace) -> "JobSpec":
        """
        :raises UserInputError: for missing or inconsistent parameters
        """
        if args.command == COMMAND_INTEGRAL:
            return JobSpec._integral(args)
        if args.command == COMMAND_VERIFY:
            if args.identity not in IdentityName().get_all_values():
                raise UserInputError(f"Unknown identity '{args.identity}', choose one of "
                                     f"{', '.join(sorted(IdentityName().get_all_values()))}")
            if args.workers is not None and args.workers < 1:
                raise UserInputError(f"--workers must be at least 1, got {args.workers}")
            vr = VerificationRange(args.gmax, args.dmax, args.nmax, args.lambda_order, args.seed)
            return JobSpec(COMMAND_VERIFY, identity=args.identity, verification_range=vr, guard=args.guard,
                           workers=args.workers, recheck=args.recheck)
        if args.command == COMMAND_TABLE:
            if not TableFamily().contains(args.family):
                raise UserInputError(f"Unknown table '{args.family}', choose one of "
                                     f"{', '.join(sorted(TableFamily().get_all_values()))}")
            if args.gmin > args.gmax:
                raise UserInputError(f"--gmin {args.gmin} exceeds --gmax {args.gmax}")
            vr = VerificationRange(g_max=args.gmax, n_max=args.nmax)
            return JobSpec(COMMAND_TABLE, family=args.family, output_format=args.format, verification_range=vr,
                           g_min=args.gmin, m_max=args.mmax)
        if args.command == COMMAND_SERIES:
            if args.g < 0:
                raise UserInputError(f"Genus must be non-negative, got {args.g}")
            mu = Partition.from_string(args.mu)
            if mu.size == 0:
                raise UserInputError("series needs a nonempty partition")
            return JobSpec(COMMAND_SERIES, g=args.g, mu=mu, guard=args.guard, recheck=args.recheck)
        raise UserInputError(f"Unknown command '{args.command}'")

    @staticmethod
    def _integral(args: argparse.Namespace) -> "JobSpec":
        if args.g < 0:
            raise UserInputError(f"Genus must be non-negative, got {args.g}")
        mu = Partition.from_string(args.mu) if args.mu is not None else EMPTY_PARTITION
        psi = _parse_exponents(args.psi)
        kind = args.kind
        if kind == KIND_LAMBDA_G and psi is None:
            raise UserInputError("--lambda-g needs --psi")
        if kind == KIND_LINEAR and mu.size == 0:
            raise UserInputError("--linear needs --mu")
        if kind == KIND_THM32 and args.m is None:
            raise UserInputError("--thm32 needs --m")
        if kind == KIND_LAMBDA_GM1 and (psi is None) == (mu.size == 0):
            raise UserInputError("--lambda-gm1 needs exactly one of --mu and --psi")
        return JobSpec(COMMAND_INTEGRAL, kind=kind, g=args.g, mu=mu, psi=psi, m=args.m, use_engine=args.engine,
                       output_format=args.format, guard=args.guard, recheck=args.recheck)


def evaluate_integral(job: JobSpec, engine: Optional[MarinoVafaEngine] = None) -> HodgeValue:
    """
    Computes the integral a job describes, together with the path it was computed by.
    :raises DimensionError: if the integrand does not match the dimension of the moduli space
    """
    g = job.g
    if job.kind == KIND_LAMBDA_G:
        check_dimension(g, len(job.psi), g + sum(job.psi))
        return HodgeValue(g, f"λ{g}·{_psi_text(job.psi)}", lambda_g_conjecture(g, job.psi),
                          "λ_g conjecture, multinomial times b_g")
    if job.kind == KIND_LINEAR:
        integrand = f"λ{g}/Π(1-μ_iψ_i), μ={job.mu}"
        if job.use_engine:
            engine = engine if engine is not None else MarinoVafaEngine(guard=job.guard, recheck=job.recheck or None)
            return HodgeValue(g, integrand, engine.extract_report(g, job.mu).lambda_g_value,
                              "Mariño-Vafa engine, lowest τ coefficient")
        return HodgeValue(g, integrand, lambda_g_linear(g, job.mu), "closed form |μ|^(2g+n-3)·b_g")
    if job.kind == KIND_LAMBDA1_LAMBDAG:
        return HodgeValue(g, f"λ1·λ{g}·ψ1^{2 * g - 3}", lambda1_lambdag(g), "λ1λg formula")
    if job.kind == KIND_THM32:
        return theorem32_pipeline(g, job.m).to_hodge_value()
    if job.kind == KIND_LAMBDA_GM1:
        if job.psi is not None:
            n = len(job.psi)
            check_dimension(g, n, g - 1 + sum(job.psi))
            return HodgeValue(g, f"λ{g - 1}·{_psi_text(job.psi)}", lambda_gm1_psi_integrals(g, n)[job.psi],
                              "λ_(g-1) recursion, forward differences")
        return HodgeValue(g, f"λ{g - 1}/Π(1-μ_iψ_i), μ={job.mu}", lambda_gm1_recursion(g, job.mu),
                          "λ_(g-1) recursion, top homogeneous part")
    raise UserInputError(f"Unknown integral kind '{job.kind}'")


def _dump(document: dict) -> str:
    return json.dumps(document, ensure_ascii=False, indent=2)


def run(job: JobSpec, config: Optional[EngineConfig] = None) -> int:
    """
    Executes a job, printing results to stdout.
    :return: the process exit code
    """
    if job.command == COMMAND_INTEGRAL:
        value = evaluate_integral(job)
        if job.output_format == OUTPUT_JSON:
            print(_dump(value.to_json()))
        else:
            print(format_fraction(value.value))
            print(f"{value.integrand} [{value.method}]")
        return ExitCode.SUCCESS

    if job.command == COMMAND_TABLE:
        vr = job.verification_range
        print(render_table(table_frame(job.family, job.g_min, vr.g_max, job.m_max, vr.n_max), job.output_format))
        return ExitCode.SUCCESS

    config = config if config is not None else EngineConfig()
    engine = MarinoVafaEngine(guard=job.guard, config=config, recheck=job.recheck or None)
    if job.command == COMMAND_SERIES:
        print(_dump(engine.hodge_polynomial(job.g, job.mu).to_series_json()))
        return ExitCode.SUCCESS

    result = Verifier(engine=engine, config=config, workers=job.workers).run(job.identity, job.verification_range)
    print(_dump(result.to_json()))
    if not result.passed:
        failure = result.first_failure
        _logger.error(f"{job.identity} failed at {failure.parameters}: {failure.lhs} != {failure.rhs}")
        return ExitCode.VERIFICATION_FAILED
    return ExitCode.SUCCESS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mvhodge", description="Exact Hodge integrals from the Mariño-Vafa formula")
    commands = parser.add_subparsers(dest="command", required=True)

    integral = commands.add_parser(COMMAND_INTEGRAL, help="compute a single Hodge integral")
    kinds = integral.add_mutually_exclusive_group(required=True)
    kinds.add_argument("--lambda-g", dest="kind", action="store_const", const=KIND_LAMBDA_G,
                       help="λ_g times ψ-monomial, needs --psi")
    kinds.add_argument("--linear", dest="kind", action="store_const", const=KIND_LINEAR,
                       help="λ_g / Π(1-μ_iψ_i), needs --mu")
    kinds.add_argument("--lambda1-lambdag", dest="kind", action="store_const", const=KIND_LAMBDA1_LAMBDAG,
                       help="λ_1 λ_g ψ^(2g-3) on M_{g,1}")
    kinds.add_argument("--thm32", dest="kind", action="store_const", const=KIND_THM32,
                       help="λ_g ch_(2g-2-m) ψ^m reduced to λ-monomials, needs --m")
    kinds.add_argument("--lambda-gm1", dest="kind", action="store_const", const=KIND_LAMBDA_GM1,
                       help="λ_(g-1) integrals, needs --mu or --psi")
    integral.add_argument("--g", type=int, required=True, help="genus")
    integral.add_argument("--psi", help="comma separated ψ-exponents, e.g. 2,0,1")
    integral.add_argument("--mu", help="comma separated partition, e.g. 3,1,1")
    integral.add_argument("--m", type=int, help="ψ-power of the ch-integral")
    integral.add_argument("--engine", action="store_true", help="compute --linear through the engine")
    integral.add_argument("--format", choices=[OUTPUT_TEXT, OUTPUT_JSON], default=OUTPUT_TEXT)
    integral.add_argument("--guard", type=int, help="extra λ-orders kept by the engine")
    integral.add_argument("--recheck", action="store_true", help="recompute every polynomial one λ-order higher")

    verify = commands.add_parser(COMMAND_VERIFY, help="verify an identity over a parameter range")
    verify.add_argument("identity", help=", ".join(sorted(IdentityName().get_all_values())))
    verify.add_argument("--gmax", type=int, default=2, help="largest genus")
    verify.add_argument("--dmax", type=int, default=4, help="largest partition size")
    verify.add_argument("--nmax", type=int, default=5, help="largest number of marked points")
    verify.add_argument("--lambda-order", type=int, default=6, help="λ-order of series identities")
    verify.add_argument("--seed", type=int, default=0, help="seed of randomised checks")
    verify.add_argument("--workers", type=int, help="worker threads, defaults to MVHODGE_WORKERS")
    verify.add_argument("--guard", type=int, help="extra λ-orders kept by the engine")
    verify.add_argument("--recheck", action="store_true", help="recompute every polynomial one λ-order higher")

    table = commands.add_parser(COMMAND_TABLE, help="print a table of values")
    table.add_argument("family", help=", ".join(sorted(TableFamily().get_all_values())))
    table.add_argument("--gmin", type=int, default=0, help="smallest genus")
    table.add_argument("--gmax", type=int, default=3, help="largest genus")
    table.add_argument("--mmax", type=int, default=12, help="largest Bernoulli index")
    table.add_argument("--nmax", type=int, default=3, help="largest number of marked points")
    table.add_argument("--format", choices=[OUTPUT_TEXT, OUTPUT_JSON], default=OUTPUT_TEXT)

    series = commands.add_parser(COMMAND_SERIES, help="dump the τ-coefficients of P_{g,μ}")
    series.add_argument("--g", type=int, required=True, help="genus")
    series.add_argument("--mu", required=True, help="comma separated partition, e.g. 2,1")
    series.add_argument("--guard", type=int, help="extra λ-orders kept by the engine")
    series.add_argument("--recheck", action="store_true", help="recompute every polynomial one λ-order higher")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return _build_parser().parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    try:
        return run(JobSpec.from_args(args))
    except UserInputError as uie:
        _logger.error(str(uie))
        return ExitCode.USER_ERROR
    except ConsistencyError as ce:
        _logger.exception(f"Internal consistency error: {ce}")
        return ExitCode.CONSISTENCY_ERROR
    except EnvironmentError as ee:
        _logger.error(f"Configuration error: {ee}")
        return ExitCode.USER_ERROR


if __name__ == "__main__":
    sys.exit(main())
