from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Tuple
from mvhodge.errors import UserInputError
from mvhodge.partition import Partition, enumerate_partitions


@dataclass(frozen=True)
class CharacterQuery:
    """
    Value of the irreducible character labelled by nu on the conjugacy class of cycle type mu.
    """
    nu: Partition
    mu: Partition

    def __post_init__(self):
        if self.nu.size != self.mu.size:
            raise UserInputError(f"Character of S_{self.nu.size} cannot be evaluated on a class of S_{self.mu.size}")


def _beta_set(nu: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(nu)
    return tuple(part + length - i for i, part in enumerate(nu, start=1))


def _from_beta_set(beta) -> Tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    parts = [b - (length - i) for i, b in enumerate(ordered, start=1)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _murnaghan_nakayama(nu: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1 if not nu else 0
    # strip the longest cycle first
    strip, rest = mu[0], mu[1:]
    beta = _beta_set(nu)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - strip
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = (occupied - {b}) | {target}
        value = _murnaghan_nakayama(_from_beta_set(moved), rest)
        total += -value if height % 2 else value
    return total


def character(query: CharacterQuery) -> int:
    """
    Evaluates χ_ν(C(μ)) by the Murnaghan-Nakayama rule, removing border strips on the abacus of ν. Results are
    memoized per (ν, μ) pair.
    :param query: the validated (ν, μ) pair
    :return: the exact integer character value
    """
    return _murnaghan_nakayama(query.nu.parts, query.mu.parts)


def character_value(nu: Partition, mu: Partition) -> int:
    return character(CharacterQuery(nu, mu))


def class_characters(mu: Partition) -> Dict[Partition, int]:
    """ Returns {ν: χ_ν(C(μ))} over all partitions ν of |μ| """
    return {nu: character_value(nu, mu) for nu in enumerate_partitions(mu.size)}


def dimension(nu: Partition) -> int:
    """ Dimension of the irreducible representation via the hook length formula """
    return factorial(nu.size) // prod(nu.hook_lengths())


def cache_info():
    return _murnaghan_nakayama.cache_info()
