from mvhodge.errors import MvHodgeError, UserInputError, DimensionError, ConsistencyError, InexactDivisionError, \
    TruncationError, ImaginaryResidueError, InterpolationError
from mvhodge.logger import Logger
from mvhodge.app_config import BasicConfig, EngineConfig
from mvhodge.constant_listing import ConstantListing, IdentityName, ExitCode, TableFamily
from mvhodge.performance_logger import PerformanceLogger
from mvhodge.json_document import JsonDocument, list_to_json, list_from_json
from mvhodge.files import write_json, read_json, ensure_directory
from mvhodge.gaussian import GaussianRational, to_fraction, format_fraction
from mvhodge.tau_polynomial import TauPolynomial, tau_exact_div
from mvhodge.partition import Partition, enumerate_partitions, partitions_up_to
from mvhodge.laurent_series import LaurentSeries
from mvhodge.p_series import PSeries, series_exp, series_log
from mvhodge.characters import character_value, class_characters
from mvhodge.bernoulli import bernoulli, b_g, F_brute, F_closed
from mvhodge.mv_engine import MarinoVafaEngine, HodgePolynomial, hodge_polynomial, extract_report
from mvhodge.mumford import MumfordNormalForm, LambdaMonomial, mumford_reduce
from mvhodge.identities import HodgeValue, lambda_g_conjecture, lambda_g_linear, lambda1_lambdag, theorem32_pipeline
from mvhodge.verification import Verifier, VerificationRange
