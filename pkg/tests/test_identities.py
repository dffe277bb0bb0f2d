from fractions import Fraction
import pytest
from mvhodge.bernoulli import b_g
from mvhodge.errors import DimensionError, UserInputError
from mvhodge.identities import HodgeValue, admissible_exponents, check_dimension, eq26_sides, eq36_coefficient_identity, \
    eq36_sides, g_combination, lambda1_lambdag, lambda_g_conjecture, lambda_g_linear, lambda_g_recursion_32, \
    lambda_gm1_one_point, lambda_gm1_psi_integrals, lambda_gm1_recursion, lhs_polynomial_in_d, proof_helpers_34, \
    theorem31_sides, theorem32_pipeline, theorem32_relation, theorem32_rhs, theorem52_verify, theorem53_singular
from mvhodge.mv_engine import HodgeCache, MarinoVafaEngine
from mvhodge.partition import Partition, partitions_up_to


@pytest.fixture(scope="module")
def engine():
    return MarinoVafaEngine(guard=2, cache=HodgeCache())


def test_dimension_check():
    check_dimension(1, 1, 1)
    with pytest.raises(DimensionError) as error:
        check_dimension(2, 1, 3)
    assert error.value.g == 2
    assert error.value.degree == 3


def test_ch_integral_values():
    assert theorem32_rhs(2, 1) == Fraction(-1, 2880)
    assert theorem32_rhs(3, 2) == 0
    with pytest.raises(UserInputError):
        theorem32_rhs(2, 2)
    with pytest.raises(UserInputError):
        theorem32_rhs(1, 1)


def test_pipeline_reduces_to_lambda_monomials():
    first = theorem32_pipeline(3, 1)
    assert first.value == Fraction(1, 362880)
    assert first.monomial == "λ1·λ2·λ3·ψ1"
    second = theorem32_pipeline(3, 2)
    assert second.value == 0
    assert second.normal_form == "0"
    third = theorem32_pipeline(3, 3)
    assert third.value == Fraction(41, 1451520)
    assert third.to_hodge_value().value == Fraction(41, 1451520)


def test_relation_with_external_constant():
    assert theorem32_relation(3, 2, (2, 0, 1)) == Fraction(1, 60480)
    with pytest.raises(UserInputError):
        theorem32_relation(3, 2, (2, 0, 1), known={})


def test_lambda1_lambdag():
    assert lambda1_lambdag(2) == Fraction(1, 2880)
    assert lambda1_lambdag(3) == Fraction(41, 1451520)
    assert lambda1_lambdag(3) == theorem32_pipeline(3, 3).value
    for g in (2, 3):
        assert proof_helpers_34(g).value == lambda1_lambdag(g)


def test_lambda_g_formulas():
    assert lambda_g_conjecture(1, (0,)) == Fraction(1, 24)
    assert lambda_g_conjecture(2, (2, 1)) == Fraction(7, 1920)
    assert lambda_g_conjecture(2, (1, 1)) == 0
    assert lambda_g_linear(1, Partition([2, 1])) == Fraction(1, 8)
    assert lambda_g_linear(0, Partition([2, 1, 1])) == 1
    assert lambda_g_linear(0, Partition([2, 1, 1, 1])) == 5
    assert lambda_g_linear(3, Partition([1])) == b_g(3)
    with pytest.raises(UserInputError):
        lambda_g_conjecture(0, (0,))
    with pytest.raises(UserInputError):
        lambda_g_linear(1, Partition())


@pytest.mark.parametrize("g", range(1, 4))
def test_marked_point_recursion(g):
    for n in range(2, 6):
        for exponents in admissible_exponents(g, n):
            assert eq36_sides(g, exponents).passed
            assert eq36_coefficient_identity(g, exponents).passed


def test_join_recursion_of_linear_integrals():
    for g in range(1, 4):
        for mu in partitions_up_to(5):
            if mu.length >= 2:
                assert lambda_g_recursion_32(g, mu).passed


@pytest.mark.parametrize("mu", [mu for mu in partitions_up_to(10) if 2 <= mu.length <= 5])
def test_singular_parts(mu):
    assert theorem53_singular(mu).passed


def test_singular_parts_need_two_parts():
    with pytest.raises(UserInputError):
        theorem53_singular(Partition([4]))


def test_g_combination():
    assert [g_combination(1, Partition([d])) for d in range(1, 6)] == [Fraction(d - 1, 24) for d in range(1, 6)]
    assert g_combination(1, Partition([1, 1])) == Fraction(1, 24)
    assert g_combination(0, Partition([3, 1])) == 0


def test_lambda_gm1_integrals():
    assert lambda_gm1_psi_integrals(1, 2) == {(0, 2): Fraction(1, 24), (1, 1): Fraction(1, 24),
                                              (2, 0): Fraction(1, 24)}
    assert lambda_gm1_one_point(1) == Fraction(1, 24)
    assert lambda_gm1_one_point(2) == Fraction(1, 480)
    assert lambda_gm1_recursion(1, Partition([2, 1])) == Fraction(7, 24)
    with pytest.raises(UserInputError):
        lambda_gm1_psi_integrals(0, 1)


def test_engine_bracket_recursion(engine):
    for g in range(2):
        for mu in partitions_up_to(3):
            assert theorem52_verify(g, mu, engine).passed


def test_polynomial_in_d(engine):
    coefficients = lhs_polynomial_in_d(2, engine, check_points=1)
    assert len(coefficients) == 4
    assert coefficients[1] == theorem32_rhs(2, 1)
    assert coefficients[3] == -lambda_gm1_one_point(2)


def test_series_identities(engine):
    for d in range(1, 4):
        assert theorem31_sides(d, 4, engine).passed
    assert eq26_sides(4, 6).passed


def test_hodge_value_json():
    payload = HodgeValue(1, "λ1", Fraction(1, 24), "λ_g conjecture").to_json()
    assert payload == {"g": "1", "integrand": "λ1", "value": "1/24", "method": "λ_g conjecture"}
