"""Integer partitions and the compositions that size Young subgroups"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate

from app.errors import InvalidPartition


@dataclass(frozen=True)
class Composition:
    """Positive block sizes in any order; the empty composition is allowed"""
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise InvalidPartition(f"Block sizes must be positive: {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def partial_sums(self) -> tuple[int, ...]:
        """λ₁, λ₁+λ₂, ... (the right ends of the Young blocks)"""
        return tuple(accumulate(self.parts))

    @cached_property
    def blocks(self) -> tuple[range, ...]:
        """The Young blocks {λ₁+…+λ_{i−1}+1, …, λ₁+…+λ_i} as 1-indexed ranges"""
        starts = (0,) + self.partial_sums[:-1]
        return tuple(range(s + 1, e + 1) for s, e in zip(starts, self.partial_sums))

    def __getitem__(self, i):
        return self.parts[i]

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ','.join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Partition(Composition):
    """A weakly decreasing tuple of positive parts"""

    def __post_init__(self):
        super().__post_init__()
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidPartition(f"Partition {self.parts} is not weakly decreasing")

    def is_hook(self) -> bool:
        return self.length > 0 and all(p == 1 for p in self.parts[1:])

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1


def as_composition(shape) -> Composition:
    """Accept a Partition, a Composition or a bare sequence of block sizes"""
    if isinstance(shape, Composition):
        return shape
    return Composition(tuple(shape))


def partitions_of(n: int, max_part: int | None = None):
    """Yield the partitions of n in reverse lexicographic order"""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)
