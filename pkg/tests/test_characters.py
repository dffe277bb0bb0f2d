from fractions import Fraction
import pytest
from mvhodge.characters import CharacterQuery, character, character_value, class_characters, dimension
from mvhodge.errors import UserInputError
from mvhodge.partition import Partition, enumerate_partitions


def test_small_character_table():
    trivial, standard, sign = Partition([3]), Partition([2, 1]), Partition([1, 1, 1])
    assert [character_value(standard, mu) for mu in (sign, standard, trivial)] == [2, 0, -1]
    assert [character_value(sign, mu) for mu in (sign, standard, trivial)] == [1, -1, 1]
    assert class_characters(trivial) == {trivial: 1, standard: -1, sign: 1}
    assert character_value(Partition([3, 1]), Partition([2, 2])) == -1
    assert character_value(Partition([3, 1]), Partition([4])) == -1
    assert character_value(Partition([2, 2]), Partition([3, 1])) == -1
    assert character_value(Partition(), Partition()) == 1


def test_query_validation():
    with pytest.raises(UserInputError):
        character(CharacterQuery(Partition([2]), Partition([1, 1, 1])))


@pytest.mark.parametrize("d", range(1, 9))
def test_orthogonality(d):
    classes = enumerate_partitions(d)
    for nu in classes:
        assert character_value(nu, Partition([1] * d)) == dimension(nu)
        for rho in classes:
            inner = sum((Fraction(character_value(nu, mu) * character_value(rho, mu), mu.z_factor())
                         for mu in classes), Fraction(0))
            assert inner == (1 if nu == rho else 0)
    for mu in classes:
        for sigma in classes:
            column = sum(character_value(nu, mu) * character_value(nu, sigma) for nu in classes)
            assert column == (mu.z_factor() if mu == sigma else 0)
