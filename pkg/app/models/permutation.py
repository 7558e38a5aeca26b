"""Permutations of [n] in one-line notation"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from app.errors import InvalidPermutation, SizeMismatch


@dataclass(frozen=True)
class Permutation:
    """images[i-1] = w(i); composition follows (uv)(i) = u(v(i))"""
    images: tuple[int, ...] = ()

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise SizeMismatch(f"Cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, value in enumerate(self.images, start=1):
            inv[value - 1] = i
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        w = self.images
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def __lt__(self, other):
        return self.images < other.images

    def __str__(self):
        if self.n <= 9:
            return ''.join(str(v) for v in self.images)
        return ','.join(str(v) for v in self.images)
