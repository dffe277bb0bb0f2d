from fractions import Fraction
import pytest
from mvhodge.constant_listing import IdentityName
from mvhodge.errors import UserInputError
from mvhodge.mv_engine import HodgeCache, MarinoVafaEngine
from mvhodge.partition import Partition
from mvhodge.verification import SuiteResult, VerificationRange, VerificationReport, Verifier


@pytest.fixture(scope="module")
def verifier():
    return Verifier(engine=MarinoVafaEngine(guard=2, cache=HodgeCache()), workers=1)


SMALL = VerificationRange(g_max=1, d_max=3, n_max=4, order=4)


def test_all_identities_registered(verifier):
    assert verifier.identities() == sorted(IdentityName().get_all_values())


@pytest.mark.parametrize("identity", [IdentityName.MUMFORD, IdentityName.EQ26, IdentityName.EQ31,
                                      IdentityName.EQ32, IdentityName.EQ36, IdentityName.THM31,
                                      IdentityName.THM52, IdentityName.THM53, IdentityName.THM41_VS_ENGINE,
                                      IdentityName.VNU_EQUIVALENCE, IdentityName.F_CLOSED_VS_BRUTE])
def test_suites_pass_on_small_range(verifier, identity):
    result = verifier.run(identity, SMALL)
    assert len(result.reports) > 0
    assert result.passed, result.first_failure.to_json()
    assert result.to_json()["firstFailure"] is None


def test_ch_integral_suite(verifier):
    result = verifier.run(IdentityName.THM32_VS_ENGINE, VerificationRange(g_max=2, d_max=2))
    assert result.passed
    assert [report.parameters["m"] for report in result.reports] == [1, 1, 3]


def test_parallel_run_is_ordered():
    engine = MarinoVafaEngine(guard=2, cache=HodgeCache())
    serial = Verifier(engine=engine, workers=1).run(IdentityName.THM53, VerificationRange(d_max=6))
    parallel = Verifier(engine=engine, workers=4).run(IdentityName.THM53, VerificationRange(d_max=6))
    assert [r.parameters for r in serial.reports] == [r.parameters for r in parallel.reports]
    assert parallel.passed


def test_unknown_identity(verifier):
    with pytest.raises(UserInputError):
        verifier.run("thm99", SMALL)


def test_range_validation():
    with pytest.raises(UserInputError):
        VerificationRange(d_max=-1)


def test_failure_reporting():
    failing = VerificationReport("demo", {"mu": Partition([2, 1])}, Fraction(1), Fraction(2), False, 3, "")
    passing = VerificationReport("demo", {"mu": Partition([1])}, Fraction(1), Fraction(1), True, 1, "")
    result = SuiteResult("demo", [passing, failing], 4)
    assert not result.passed
    payload = result.to_json()
    assert payload["pass"] is False
    assert payload["cases"] == 2
    assert payload["firstFailure"]["parameters"] == {"mu": "2,1"}
    assert payload["firstFailure"]["lhs"] == "1"
