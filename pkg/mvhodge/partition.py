from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Dict, Iterable, List, Tuple
from mvhodge.errors import UserInputError


class Partition:
    """
    An integer partition stored as a weakly decreasing tuple of positive parts. Instances are immutable and
    canonical, so they can be used as dictionary keys (p-monomials, cache keys).
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int) or part <= 0:
                raise UserInputError(f"Partition parts must be positive integers, got {part!r}")
        self.parts: Tuple[int, ...] = tuple(sorted(parts, reverse=True))
        self._hash = hash(self.parts)

    @staticmethod
    def from_string(text: str) -> "Partition":
        """
        Parses the comma separated text format, e.g. "3,1,1". The empty string is the empty partition.
        """
        text = text.strip()
        if text == "":
            return EMPTY_PARTITION
        try:
            return Partition(int(token) for token in text.split(","))
        except ValueError as ve:
            if isinstance(ve, UserInputError):
                raise
            raise UserInputError(f"Cannot parse partition from '{text}'") from ve

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def kappa(self) -> int:
        return sum(p * (p - 2 * i + 1) for i, p in enumerate(self.parts, start=1))

    def aut_order(self) -> int:
        return prod(factorial(m) for m in Counter(self.parts).values())

    def z_factor(self) -> int:
        return prod(factorial(m) * part ** m for part, m in Counter(self.parts).items())

    def product_of_parts(self) -> int:
        return prod(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def hook_lengths(self) -> Tuple[int, ...]:
        """
        Returns the hook lengths of all cells of the Young diagram, largest first.
        """
        columns = self.conjugate().parts
        hooks = [row - j + columns[j] - i - 1 for i, row in enumerate(self.parts) for j in range(row)]
        return tuple(sorted(hooks, reverse=True))

    def union(self, other: "Partition") -> "Partition":
        return Partition(self.parts + tuple(other))

    def add(self, *parts: int) -> "Partition":
        return Partition(self.parts + parts)

    def remove(self, *parts: int) -> "Partition":
        """
        Removes the given parts (with multiplicity).
        :raises ValueError: if a part is not present often enough
        """
        remaining = list(self.parts)
        for part in parts:
            try:
                remaining.remove(part)
            except ValueError:
                raise ValueError(f"Part {part} not contained in partition {self}")
        return Partition(remaining)

    def sub_multisets(self) -> List["Partition"]:
        """
        Returns every sub-multiset of the parts exactly once, including the empty one and the partition itself.
        """
        counts = sorted(Counter(self.parts).items(), reverse=True)
        result = []
        for choice in product(*(range(m + 1) for _, m in counts)):
            parts = []
            for (part, _), taken in zip(counts, choice):
                parts.extend([part] * taken)
            result.append(Partition(parts))
        return result

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Partition"):
        return (self.size, self.parts) < (other.size, other.parts)

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


EMPTY_PARTITION = Partition()


def _generate(remaining: int, largest: int) -> Iterable[Tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, largest), 0, -1):
        for rest in _generate(remaining - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(d: int) -> Tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _generate(d, d))


def enumerate_partitions(d: int) -> List[Partition]:
    """
    Lists all partitions of d in reverse lexicographic order, i.e. (d), (d-1,1), (d-2,2), (d-2,1,1), ...
    :param d: the non-negative integer to partition; 0 yields the single empty partition
    :return: the list of partitions
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise UserInputError(f"Cannot enumerate partitions of {d!r}")
    return list(_partitions_of(d))


def partitions_up_to(d_max: int) -> List[Partition]:
    """ All nonempty partitions of weight at most d_max, ordered by weight and then reverse lexicographically """
    return [mu for d in range(1, d_max + 1) for mu in enumerate_partitions(d)]


def kappa(mu: Partition) -> int:
    return mu.kappa()


def z_factor(mu: Partition) -> int:
    return mu.z_factor()


def aut_order(mu: Partition) -> int:
    return mu.aut_order()


def hook_lengths(mu: Partition) -> Tuple[int, ...]:
    return mu.hook_lengths()


def conjugate(mu: Partition) -> Partition:
    return mu.conjugate()
