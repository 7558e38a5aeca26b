"""Standard Young tableaux, stored as lattice words"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from app.errors import NotLatticeWord
from app.models.partition import Partition


def lattice_violation(word) -> int | None:
    """Return the first 1-indexed position where the lattice property fails"""
    counts = Counter()
    for pos, letter in enumerate(word, start=1):
        if letter < 1:
            return pos
        counts[letter] += 1
        if letter > 1 and counts[letter] > counts[letter - 1]:
            return pos
    return None


@dataclass(frozen=True)
class StandardTableau:
    """A standard Young tableau; entry j lives in row word[j-1]"""
    word: tuple[int, ...] = ()

    def __post_init__(self):
        word = tuple(int(letter) for letter in self.word)
        pos = lattice_violation(word)
        if pos is not None:
            raise NotLatticeWord(
                f"Word {word} violates the lattice property at position {pos}"
            )
        object.__setattr__(self, 'word', word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    @cached_property
    def shape(self) -> Partition:
        counts = Counter(self.word)
        return Partition(tuple(counts[i] for i in range(1, len(counts) + 1)))

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        grid = [[] for _ in range(self.shape.length)]
        for entry, row in enumerate(self.word, start=1):
            grid[row - 1].append(entry)
        return tuple(tuple(r) for r in grid)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """entry -> (row, column), both 1-indexed"""
        return {
            entry: (i, j)
            for i, row in enumerate(self.rows, start=1)
            for j, entry in enumerate(row, start=1)
        }

    def row_of(self, entry: int) -> int:
        return self.word[entry - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.rows if len(row) >= j)

    def __str__(self):
        return format_letters(self.word)


def format_letters(word) -> str:
    """Digit string when every letter is a single digit, comma list otherwise"""
    if all(0 <= letter <= 9 for letter in word):
        return ''.join(str(letter) for letter in word)
    return ','.join(str(letter) for letter in word)


@dataclass(frozen=True)
class SlidePath:
    """Cells visited by the empty box during one evacuation slide, 1-indexed"""
    cells: tuple[tuple[int, int], ...] = ((1, 1),)

    @property
    def end(self) -> tuple[int, int]:
        return self.cells[-1]

    def to_list(self):
        return [list(cell) for cell in self.cells]


@dataclass(frozen=True)
class EvacuationTrace:
    result: StandardTableau
    paths: tuple[SlidePath, ...] = field(default_factory=tuple)
