"""Symmetric group: lengths, Lehmer codes, Bruhat order, Young subgroups"""
import logging
from functools import lru_cache
from itertools import permutations

from app.errors import InvalidCode, SizeMismatch
from app.models import Permutation, as_composition

logger = logging.getLogger(__name__)


def _same_size(*perms):
    sizes = {w.n for w in perms}
    if len(sizes) > 1:
        raise SizeMismatch(f"Permutations of different sizes: {sorted(sizes)}")


def _check_shape(w, shape):
    shape = as_composition(shape)
    if shape.size != w.n:
        raise SizeMismatch(f"|λ| = {shape.size} but the permutation has size {w.n}")
    return shape


def inversions(w):
    """Pairs (i, j), i < j, with w(i) > w(j)"""
    return {
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(i + 1, w.n + 1)
        if w(i) > w(j)
    }


def length(w):
    return w.length


def lehmer_code(w):
    """code_i = #{j > i : w(j) < w(i)}"""
    images = w.images
    return tuple(
        sum(1 for later in images[i + 1:] if later < value)
        for i, value in enumerate(images)
    )


def from_lehmer(code):
    """Inverse of lehmer_code"""
    code = tuple(code)
    n = len(code)
    available = list(range(1, n + 1))
    images = []
    for i, c in enumerate(code, start=1):
        if not 0 <= c <= n - i:
            raise InvalidCode(f"Entry {i} of the code must lie in [0, {n - i}], got {c}")
        images.append(available.pop(c))
    return Permutation(tuple(images))


def compose(u, v):
    _same_size(u, v)
    return u * v


def inverse(w):
    return w.inverse


def longest_element(n):
    return Permutation.longest(n)


def simple_transposition(j, n):
    return transposition(j, j + 1, n)


def transposition(i, j, n):
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def left_multiply_simple(j, w):
    """s_j·w swaps the values j and j+1"""
    swap = {j: j + 1, j + 1: j}
    return Permutation(tuple(swap.get(x, x) for x in w.images))


def right_multiply_transposition(w, i, j):
    """w·t_{i,j} swaps the positions i and j"""
    images = list(w.images)
    images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
    return Permutation(tuple(images))


def left_multiply_longest(w):
    """w₀·w"""
    return Permutation(tuple(w.n + 1 - x for x in w.images))


def right_multiply_longest(w):
    """w·w₀"""
    return Permutation(tuple(reversed(w.images)))


def bruhat_leq(v, w):
    """Ehresmann criterion: sorted prefixes of v are dominated by those of w"""
    _same_size(v, w)
    prefix_v, prefix_w = [], []
    for a, b in zip(v.images, w.images):
        prefix_v.append(a)
        prefix_w.append(b)
        prefix_v.sort()
        prefix_w.sort()
        if any(x > y for x, y in zip(prefix_v, prefix_w)):
            return False
    return True


def lex_rank(w):
    """Position of w in the lexicographic order of S_n, from its Lehmer code"""
    rank = 0
    for i, c in enumerate(lehmer_code(w)):
        rank = rank * (w.n - i) + c
    return rank


@lru_cache(maxsize=None)
def _down_set(w):
    """Bitset over lex ranks of everything reached from w by w → w·t_{i,j}, (i, j) an inversion"""
    mask = 1 << lex_rank(w)
    for i, j in inversions(w):
        mask |= _down_set(right_multiply_transposition(w, i, j))
    return mask


def bruhat_leq_closure(v, w):
    """Oracle: v lies in the transitive closure of w > w·t_{i,j} over inversions"""
    _same_size(v, w)
    if v.length > w.length:
        return False
    return bool(_down_set(w) >> lex_rank(v) & 1)


def all_permutations(n):
    """S_n in lexicographic order"""
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def w0_young(shape):
    """Longest element of the Young subgroup: reverse every block"""
    shape = as_composition(shape)
    images = []
    for block in shape.blocks:
        images.extend(reversed(block))
    return Permutation(tuple(images))


def is_min_coset(w, shape):
    """w⁻¹(j) < w⁻¹(j+1) for every j inside a Young block"""
    shape = _check_shape(w, shape)
    inv = w.inverse
    breaks = set(shape.partial_sums)
    return all(inv(j) < inv(j + 1) for j in range(1, w.n) if j not in breaks)


def min_coset_rep(w, shape):
    """Sort each block's values into increasing order of position"""
    shape = _check_shape(w, shape)
    images = list(w.images)
    inv = w.inverse
    for block in shape.blocks:
        spots = sorted(inv(value) for value in block)
        for value, spot in zip(block, spots):
            images[spot - 1] = value
    return Permutation(tuple(images))


def parabolic_factor(w, shape):
    """w = w_λ · ⌊w⌋^λ with w_λ in the Young subgroup"""
    rep = min_coset_rep(w, shape)
    return w * rep.inverse, rep


def min_coset_reps(shape):
    """All minimal coset representatives, in lexicographic order"""
    shape = as_composition(shape)
    n = shape.size
    reps = []
    next_value = [block.start for block in shape.blocks]

    def place(prefix):
        if len(prefix) == n:
            reps.append(Permutation(tuple(prefix)))
            return
        for index, block in enumerate(shape.blocks):
            if next_value[index] < block.stop:
                value = next_value[index]
                next_value[index] += 1
                prefix.append(value)
                place(prefix)
                prefix.pop()
                next_value[index] -= 1

    place([])
    reps.sort()
    logger.debug("%d minimal coset representatives for %s", len(reps), shape)
    return reps
