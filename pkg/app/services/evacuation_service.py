"""Evacuation with slide-path recording"""
import logging

from app.errors import LetterMismatch, NotHookShape
from app.models import EvacuationTrace, SlidePath, StandardTableau
from app.services.tableau_service import tableau_from_rows

logger = logging.getLogger(__name__)


def slide(sigma):
    """Perform one evacuation slide on σ.

    The entry 1 is removed and the empty box moves into the position of the
    lesser of its right and lower neighbours until it reaches an outer corner,
    where the box is deleted. Every entry is then decreased by one. Returns the
    resulting tableau (of size n-1) together with the path of the empty box.
    """
    grid = [list(row) for row in sigma.rows]
    i, j = 0, 0
    path = [(1, 1)]
    while True:
        right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
        below = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[i][j] = right
            j += 1
        else:
            grid[i][j] = below
            i += 1
        path.append((i + 1, j + 1))
    del grid[i][j]
    rows = [[x - 1 for x in row] for row in grid if row]
    return tableau_from_rows(rows), SlidePath(tuple(path))


def evacuate(sigma):
    """Compute σ∨ by n successive slides, recording every path"""
    n = sigma.n
    grid = [[0] * len(row) for row in sigma.rows]
    paths = []
    current = sigma
    for step in range(1, n + 1):
        current, path = slide(current)
        row, col = path.end
        grid[row - 1][col - 1] = n + 1 - step
        paths.append(path)
    result = tableau_from_rows(grid) if n else StandardTableau(())
    return EvacuationTrace(result=result, paths=tuple(paths))


def is_L_slide(path):
    """True when the path goes straight down and then straight right"""
    turned = False
    for (r0, c0), (r1, c1) in zip(path.cells, path.cells[1:]):
        if c1 == c0 + 1:
            turned = True
        elif turned:
            return False
    return True


def all_slides_L(sigma):
    return all(is_L_slide(path) for path in evacuate(sigma).paths)


def slide_columns(path):
    """row -> largest column the path occupies in that row"""
    columns = {}
    for row, col in path.cells:
        columns[row] = max(col, columns.get(row, 0))
    return columns


def evacuate_hook(sigma):
    """Evacuation of a hook tableau by complementing its arm and leg.

    With j' = n + 2 - j, a first row 1 < a_2 < ... < a_k becomes
    1 < a_k' < ... < a_2', and likewise for the first column.
    """
    if not sigma.shape.is_hook():
        raise NotHookShape(f"Shape {sigma.shape} is not a hook")
    n = sigma.n
    arm = sorted(n + 2 - a for a in sigma.rows[0][1:])
    leg = sorted(n + 2 - b for b in sigma.column(1)[1:])
    rows = [[1] + arm] + [[b] for b in leg]
    return tableau_from_rows(rows)


def newrow(word, ell):
    """Raise the first occurrences of 1..ℓ by one, then prepend 1"""
    if set(word) != set(range(1, ell + 1)):
        raise LetterMismatch(f"Word must use exactly the letters 1..{ell}")
    seen = set()
    out = []
    for letter in word:
        if letter not in seen:
            seen.add(letter)
            out.append(letter + 1)
        else:
            out.append(letter)
    return (1,) + tuple(out)
