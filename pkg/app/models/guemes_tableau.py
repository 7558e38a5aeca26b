"""Staircase fillings used in the hook expansion"""
from __future__ import annotations

from dataclasses import dataclass

from app.errors import InvalidGuemesTableau


@dataclass(frozen=True)
class GuemesTableau:
    """A filling of the staircase (m-1, m-2, ..., 1).

    Entries strictly increase along rows and down columns, and weakly
    increase along each diagonal from southwest to northeast.
    """
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        m = len(rows) + 1
        for i, row in enumerate(rows, start=1):
            if len(row) != m - i:
                raise InvalidGuemesTableau(f"Row {i} should have {m - i} entries, got {len(row)}")
        object.__setattr__(self, 'rows', rows)
        problem = staircase_violation(rows)
        if problem:
            raise InvalidGuemesTableau(problem)

    @property
    def m(self) -> int:
        return len(self.rows) + 1

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def entries(self):
        return [x for row in self.rows for x in row]

    def to_list(self):
        return [list(row) for row in self.rows]


def staircase_violation(rows) -> str | None:
    """Describe the first broken monotonicity constraint, if any"""
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if j > 0 and row[j - 1] >= x:
                return f"Row {i + 1} is not strictly increasing"
            if i > 0 and rows[i - 1][j] >= x:
                return f"Column {j + 1} is not strictly increasing"
            # northeast neighbour
            if i > 0 and j + 1 < len(rows[i - 1]) and x > rows[i - 1][j + 1]:
                return f"Diagonal through ({i + 1},{j + 1}) is not weakly increasing"
    return None
