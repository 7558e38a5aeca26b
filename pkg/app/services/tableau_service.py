"""Tableau business logic: lattice words, statistics, enumeration, RS"""
import logging
from bisect import bisect_right
from math import factorial

from app.config import get_limit
from app.errors import IndexOutOfRange, NotLatticeWord, SizeLimitExceeded
from app.models import Partition, Permutation, StandardTableau, partitions_of

logger = logging.getLogger(__name__)


def n_lambda(shape):
    """n(λ) = Σ (i-1)·λ_i"""
    return sum(i * part for i, part in enumerate(shape))


def tableau_from_word(word):
    """Build a tableau from its lattice word"""
    return StandardTableau(tuple(word))


def grid_violation(rows):
    """Describe why the rows are not a standard filling, or None"""
    entries = sorted(x for row in rows for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return f"Rows {rows} are not filled with 1..{len(entries)}"
    for upper, lower in zip(rows, rows[1:]):
        if len(lower) > len(upper):
            return f"Rows {rows} do not have a partition shape"
        if any(a >= b for a, b in zip(upper, lower)):
            return f"Columns of {rows} are not increasing"
    if any(a >= b for row in rows for a, b in zip(row, row[1:])):
        return f"Rows of {rows} are not increasing"
    return None


def is_standard_grid(rows):
    return grid_violation([list(row) for row in rows if len(row) > 0]) is None


def tableau_from_rows(rows):
    """Build a tableau from its rows, checking that the filling is standard"""
    rows = [list(row) for row in rows if len(row) > 0]
    problem = grid_violation(rows)
    if problem:
        raise NotLatticeWord(problem)
    word = [0] * sum(len(row) for row in rows)
    for i, row in enumerate(rows, start=1):
        for x in row:
            word[x - 1] = i
    return StandardTableau(tuple(word))


def restrict(sigma, j):
    """σ[j]: keep the entries 1..j"""
    if not 0 <= j <= sigma.n:
        raise IndexOutOfRange(f"Cannot restrict a tableau of size {sigma.n} to {j}")
    return StandardTableau(sigma.word[:j])


def delete_largest(sigma):
    """σ̄: remove the box holding n"""
    if sigma.n == 0:
        raise IndexOutOfRange("The empty tableau has no largest entry")
    return restrict(sigma, sigma.n - 1)


def concat(*tableaux):
    """Concatenate lattice words (rows of the factors are joined)"""
    word = ()
    for tableau in tableaux:
        word += tableau.word
    return StandardTableau(word)


def crop_word(word):
    """Delete every 1 and decrement the remaining letters"""
    return tuple(letter - 1 for letter in word if letter != 1)


def crop(sigma):
    """Delete the first row of σ and renumber"""
    return StandardTableau(crop_word(sigma.word))


def descents(sigma):
    return {j for j in range(1, sigma.n) if sigma.word[j] > sigma.word[j - 1]}


def maj(sigma):
    return sum(descents(sigma))


def sumone(word):
    """Σ (j-1) over positions j holding the letter 1"""
    return sum(j for j, letter in enumerate(word) if letter == 1)


def hook_length_count(shape):
    """Number of SYT of the given shape; used only as an oracle"""
    shape = Partition(tuple(shape))
    n = shape.size
    conjugate = [sum(1 for part in shape if part > j) for j in range(shape[0] if shape.length else 0)]
    hooks = 1
    for i, part in enumerate(shape):
        for j in range(part):
            hooks *= (part - j - 1) + (conjugate[j] - i - 1) + 1
    return factorial(n) // hooks


def enumerate_syt(shape, limit=None):
    """All SYT of the given shape, in lexicographic order of lattice words"""
    shape = Partition(tuple(shape))
    limit = get_limit('SYT_MAX_SIZE') if limit is None else limit
    if shape.size > limit:
        logger.warning("Refusing to enumerate SYT of size %d (limit %d)", shape.size, limit)
        raise SizeLimitExceeded(f"|λ| = {shape.size} exceeds the enumeration limit {limit}")
    result = [StandardTableau(word) for word in _lattice_words(shape.parts)]
    logger.debug("Enumerated %d tableaux of shape %s", len(result), shape)
    return result


def _lattice_words(parts):
    remaining = list(parts)
    filled = [0] * len(parts)
    word = []

    def extend():
        if len(word) == sum(parts):
            yield tuple(word)
            return
        for i in range(len(parts)):
            if filled[i] < remaining[i] and (i == 0 or filled[i] < filled[i - 1]):
                filled[i] += 1
                word.append(i + 1)
                yield from extend()
                word.pop()
                filled[i] -= 1

    yield from extend()


def all_syt(n, limit=None):
    """Every SYT of size n, shape by shape"""
    for shape in partitions_of(n):
        yield from enumerate_syt(shape, limit=limit)


def rs_insert(w):
    """Robinson–Schensted row insertion; returns the (P, Q) pair"""
    p_rows, q_rows = [], []
    for step, value in enumerate(w.images, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([value])
                q_rows.append([step])
                break
            current = p_rows[row]
            k = bisect_right(current, value)
            if k == len(current):
                current.append(value)
                q_rows[row].append(step)
                break
            current[k], value = value, current[k]
            row += 1
    return tableau_from_rows(p_rows), tableau_from_rows(q_rows)


def reading_word(sigma, bottom_up=False):
    """Entries of σ row by row, left to right; rows bottom to top if asked"""
    rows = reversed(sigma.rows) if bottom_up else sigma.rows
    return tuple(x for row in rows for x in row)


def reading_permutation(sigma, bottom_up=False):
    return Permutation(reading_word(sigma, bottom_up))
