from fractions import Fraction
from math import factorial, prod
import pytest
from mvhodge.errors import UserInputError
from mvhodge.partition import EMPTY_PARTITION, Partition, enumerate_partitions, partitions_up_to


def test_parsing_and_ordering():
    mu = Partition.from_string(" 1,3,1 ")
    assert mu.parts == (3, 1, 1)
    assert str(mu) == "3,1,1"
    assert Partition.from_string("") == EMPTY_PARTITION
    with pytest.raises(UserInputError):
        Partition.from_string("2,x")
    with pytest.raises(UserInputError):
        Partition([2, 0])
    with pytest.raises(UserInputError):
        Partition([True])


def test_enumeration_counts():
    assert [len(enumerate_partitions(d)) for d in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [mu.parts for mu in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_up_to(4)) == 11
    with pytest.raises(UserInputError):
        enumerate_partitions(-1)


def test_statistics():
    assert Partition([3]).kappa() == 6
    assert Partition([2, 1]).kappa() == 0
    assert Partition([1, 1, 1]).kappa() == -6
    assert Partition([2, 2]).z_factor() == 8
    assert Partition([2, 2, 1]).aut_order() == 2
    assert Partition([3, 1]).hook_lengths() == (4, 2, 1, 1)
    assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])


def test_multiset_operations():
    mu = Partition([2, 1, 1])
    assert mu.remove(1) == Partition([2, 1])
    assert mu.add(3) == Partition([3, 2, 1, 1])
    assert mu.union(Partition([1])) == Partition([2, 1, 1, 1])
    assert len(mu.sub_multisets()) == 6
    with pytest.raises(ValueError):
        mu.remove(3)


@pytest.mark.parametrize("d", range(1, 13))
def test_hook_and_conjugation_invariants(d):
    squares = 0
    inverse_z = Fraction(0)
    for nu in enumerate_partitions(d):
        conjugate = nu.conjugate()
        assert conjugate.conjugate() == nu
        assert conjugate.kappa() == -nu.kappa()
        assert sorted(conjugate.hook_lengths()) == sorted(nu.hook_lengths())
        assert len(nu.hook_lengths()) == d
        dim = factorial(d) // prod(nu.hook_lengths())
        squares += dim * dim
        inverse_z += Fraction(1, nu.z_factor())
    assert squares == factorial(d)
    assert inverse_z == 1
