"""Güemes tableaux and the Schubert expansion of hook components"""
import logging
from math import comb

from app.errors import EntryOutOfRange, NotHookShape
from app.models import GuemesTableau, Permutation
from app.services import symgroup_service
from app.services.springer_service import reading_w

logger = logging.getLogger(__name__)


def _check_entries(tau, n):
    bad = [x for x in tau.entries() if not 1 <= x <= n - 1]
    if bad:
        raise EntryOutOfRange(f"Entries {bad} lie outside [1, {n - 1}]")


def x_word(tau):
    """Indices of the simple reflections in c_1 c_2 ... c_m"""
    m = tau.m
    word = []
    for j in range(1, m):
        word.extend(tau.entry(i, j) for i in range(m - j, 0, -1))
    return word


def x_tau(tau, n):
    """The product x_τ = c_1 c_2 ... c_m, each c_j read up its column"""
    _check_entries(tau, n)
    images = list(range(1, n + 1))
    for a in x_word(tau):
        images[a - 1], images[a] = images[a], images[a - 1]
    return Permutation(tuple(images))


def is_reduced(tau, n):
    return x_tau(tau, n).length == comb(tau.m, 2)


def guemes_tableaux(m, n, first_row):
    """All Güemes tableaux of staircase shape δ^(m) with the given first row"""
    first_row = tuple(first_row)
    if m <= 1:
        yield GuemesTableau(())
        return
    cells = [(i, j) for i in range(1, m) for j in range(1, m - i + 1)]
    grid = {(1, j): x for j, x in enumerate(first_row, start=1)}
    free = [cell for cell in cells if cell[0] > 1]

    def candidates(i, j):
        low = 1
        if j > 1:
            low = max(low, grid[(i, j - 1)] + 1)
        low = max(low, grid[(i - 1, j)] + 1)
        high = min(n - 1, grid[(i - 1, j + 1)])
        return range(low, high + 1)

    def fill(k):
        if k == len(free):
            yield GuemesTableau(tuple(
                tuple(grid[(i, j)] for j in range(1, m - i + 1)) for i in range(1, m)
            ))
            return
        i, j = free[k]
        for value in candidates(i, j):
            grid[(i, j)] = value
            yield from fill(k + 1)
        grid.pop((i, j), None)

    yield from fill(0)


def pinned_first_row(sigma):
    """The n-k values w_σ⁻¹(n), ..., w_σ⁻¹(k+1), sorted increasingly"""
    n, k = sigma.n, sigma.shape[0]
    inv = reading_w(sigma).inverse
    return tuple(sorted(inv(value) for value in range(k + 1, n + 1)))


def reduced_guemes_tableaux(sigma):
    """Reduced tableaux of shape δ^(n-k+1) whose first row is pinned by w_σ"""
    if not sigma.shape.is_hook():
        raise NotHookShape(f"Shape {sigma.shape} is not a hook")
    n, k = sigma.n, sigma.shape[0]
    reduced = []
    examined = 0
    for tau in guemes_tableaux(n - k + 1, n, pinned_first_row(sigma)):
        examined += 1
        if is_reduced(tau, n):
            reduced.append(tau)
    logger.debug("%d of %d Güemes tableaux are reduced", len(reduced), examined)
    return reduced


def hook_expansion(sigma):
    """Schubert indices w₀·x_τ over reduced Güemes tableaux, sorted"""
    n = sigma.n
    return sorted(
        symgroup_service.left_multiply_longest(x_tau(tau, n))
        for tau in reduced_guemes_tableaux(sigma)
    )
