from fractions import Fraction
import pytest
from mvhodge.errors import UserInputError
from mvhodge.p_series import PSeries, downward_closure, series_exp, series_log
from mvhodge.partition import EMPTY_PARTITION, Partition, partitions_up_to


def _p(*parts):
    return Partition(parts)


def test_multiplication_is_multiset_union():
    x = PSeries({_p(1): Fraction(1), _p(2): Fraction(2)}, 4)
    square = x * x
    assert square.coefficient(_p(1, 1)) == 1
    assert square.coefficient(_p(2, 1)) == 4
    assert square.coefficient(_p(2, 2)) == 4
    assert (x * x * x).coefficient(_p(2, 2, 1)) == 0


def test_exp_and_log():
    x = PSeries({_p(1): Fraction(1)}, 3)
    exponential = series_exp(x)
    assert exponential.coefficient(_p(1, 1, 1)) == Fraction(1, 6)
    logarithm = series_log(PSeries({EMPTY_PARTITION: Fraction(1), _p(1): Fraction(1)}, 3))
    assert logarithm.coefficient(_p(1, 1)) == Fraction(-1, 2)
    assert logarithm.coefficient(_p(1, 1, 1)) == Fraction(1, 3)


def test_round_trips():
    terms = {mu: Fraction(mu.size * (-1) ** mu.length, mu.z_factor()) for mu in partitions_up_to(5)}
    x = PSeries(terms, 5)
    assert series_log(series_exp(x)) == x
    y = series_exp(x)
    assert series_exp(series_log(y)) == y


def test_support_restricts_keys():
    support = downward_closure([_p(2, 1)])
    assert support == frozenset({EMPTY_PARTITION, _p(1), _p(2), _p(2, 1)})
    x = PSeries({_p(1): Fraction(1), _p(2): Fraction(1)}, 3, support)
    assert (x * x).coefficient(_p(1, 1)) == 0
    assert (x * x).coefficient(_p(2, 1)) == 2


def test_constant_term_preconditions():
    with pytest.raises(UserInputError):
        series_exp(PSeries.one(2))
    with pytest.raises(UserInputError):
        series_log(PSeries({_p(1): Fraction(1)}, 2))
