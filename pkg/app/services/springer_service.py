"""Reading words, Richardson envelopes, Z_λ cells, smoothness and K-components"""
import logging
from collections import defaultdict
from itertools import combinations

from app.config import get_limit
from app.errors import (
    ConsistencyError,
    ElementOutOfRange,
    NotComparable,
    NotRichardson,
    SizeLimitExceeded,
)
from app.models import CellIndex, Partition, Permutation
from app.services import evacuation_service, richardson_service, symgroup_service
from app.services.tableau_service import (
    n_lambda,
    reading_permutation,
    tableau_from_rows,
)

logger = logging.getLogger(__name__)


def reading_w(sigma):
    """w_σ, where w₀·w_σ⁻¹·w₀ is the bottom-to-top reading word of σ"""
    x = reading_permutation(sigma, bottom_up=True)
    n = sigma.n
    conjugated = Permutation(tuple(n + 1 - x(n + 1 - i) for i in range(1, n + 1)))
    return conjugated.inverse


def reading_v(sigma):
    """v_σ, whose inverse is the top-down reading word of σ∨"""
    evacuated = evacuation_service.evacuate(sigma).result
    return reading_permutation(evacuated).inverse


def lehmer_w_direct(sigma):
    """code_{n+1-j} = #{i < j : row(i) < row(j)}"""
    word = sigma.word
    n = sigma.n
    code = [0] * n
    for j in range(1, n + 1):
        code[n - j] = sum(1 for i in range(1, j) if word[i - 1] < word[j - 1])
    return tuple(code)


def length_gap(sigma):
    return reading_w(sigma).length - reading_v(sigma).length


def is_richardson_gap(sigma):
    return length_gap(sigma) == n_lambda(sigma.shape)


def richardson_envelope(sigma):
    """(v_σ, w_σ, ℓ(w_σ) - ℓ(v_σ))"""
    v, w = reading_v(sigma), reading_w(sigma)
    if not symgroup_service.bruhat_leq(v, w):
        raise ConsistencyError(f"v_σ = {v} is not below w_σ = {w}")
    return CellIndex.of(v, w)


def _inner_indices(shape):
    """[n-1] minus the partial sums of λ"""
    shape = Partition(tuple(shape))
    breaks = set(shape.partial_sums)
    return [j for j in range(1, shape.size) if j not in breaks]


def in_Z(v, w, shape):
    """(v, w) indexes a totally positive cell of the fiber of shape λ"""
    if not (symgroup_service.is_min_coset(v, shape) and symgroup_service.is_min_coset(w, shape)):
        return False
    if not symgroup_service.bruhat_leq(v, w):
        return False
    return not any(
        symgroup_service.bruhat_leq(symgroup_service.left_multiply_simple(j, v), w)
        for j in _inner_indices(shape)
    )


def _collect_cells(shape, limit, dim=None):
    """Pairs of min-coset representatives in Z_λ, optionally only those of one dimension"""
    shape = Partition(tuple(shape))
    limit = get_limit('CELLS_MAX_SIZE') if limit is None else limit
    if shape.size > limit:
        logger.warning("Refusing to enumerate cells of size %d (limit %d)", shape.size, limit)
        raise SizeLimitExceeded(f"|λ| = {shape.size} exceeds the cell enumeration limit {limit}")
    reps = symgroup_service.min_coset_reps(shape)
    by_length = defaultdict(list)
    for w in reps:
        by_length[w.length].append(w)
    inner = _inner_indices(shape)
    cells = []
    for v in reps:
        candidates = reps if dim is None else by_length.get(v.length + dim, [])
        if not candidates:
            continue
        raised = [symgroup_service.left_multiply_simple(j, v) for j in inner]
        for w in candidates:
            if not symgroup_service.bruhat_leq(v, w):
                continue
            if any(symgroup_service.bruhat_leq(u, w) for u in raised):
                continue
            cells.append(CellIndex.of(v, w))
    cells.sort()
    logger.debug("%d cells for shape %s", len(cells), shape)
    return cells


def enumerate_cells(shape, limit=None):
    """All (v, w) in Z_λ sorted by (dim, v, w)"""
    return _collect_cells(shape, limit)


def top_cells(shape, limit=None):
    """Cells of dimension n(λ); only w with ℓ(w) = ℓ(v) + n(λ) are compared"""
    return _collect_cells(shape, limit, dim=n_lambda(Partition(tuple(shape))))


def is_richardson_bruhat(sigma):
    """s_j·v_σ is not below w_σ for every j inside a Young block"""
    v, w = reading_v(sigma), reading_w(sigma)
    return not any(
        symgroup_service.bruhat_leq(symgroup_service.left_multiply_simple(j, v), w)
        for j in _inner_indices(sigma.shape)
    )


def deodhar_set(v, w):
    """{(i, j) : v < v·t_{i,j} <= w}"""
    if not symgroup_service.bruhat_leq(v, w):
        raise NotComparable(f"{v} is not below {w} in Bruhat order")
    n = v.n
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if v(i) < v(j)
        and symgroup_service.bruhat_leq(symgroup_service.right_multiply_transposition(v, i, j), w)
    }


def schubert_smooth_at(w, v):
    """Deodhar: the Schubert variety of w is smooth at v iff the Bruhat graph degree equals ℓ(w)-ℓ(v)"""
    return len(deodhar_set(v, w)) == w.length - v.length


def richardson_smooth(v, w):
    return schubert_smooth_at(w, v) and schubert_smooth_at(
        symgroup_service.left_multiply_longest(v),
        symgroup_service.left_multiply_longest(w),
    )


def richardson_smooth_tableau(sigma):
    return richardson_smooth(reading_v(sigma), reading_w(sigma))


def reflection_pairs_tableau(sigma, mode='evac'):
    """Pairs (i, j) with i in a higher row than j and i the largest entry <= j of its row"""
    if not richardson_service.is_richardson_def(sigma):
        raise NotRichardson(f"{sigma} is not a Richardson tableau")
    if mode == 'evac':
        target = evacuation_service.evacuate(sigma).result
    elif mode == 'plain':
        target = sigma
    else:
        raise ValueError(f"Unknown mode {mode!r}")
    pairs = set()
    for j in range(1, target.n + 1):
        row_j = target.row_of(j)
        for row in target.rows[:row_j - 1]:
            smaller = [x for x in row if x <= j]
            if smaller:
                pairs.add((max(smaller), j))
    return pairs


def deodhar_certificate(v, w):
    """Both reflection sets behind the Richardson smoothness test"""
    low = symgroup_service.left_multiply_longest(w)
    high = symgroup_service.left_multiply_longest(v)
    first = deodhar_set(v, w)
    second = deodhar_set(low, high)
    return {
        'v': v,
        'w': w,
        'gap': w.length - v.length,
        'schubert': sorted(first),
        'opposite': sorted(second),
        'schubert_smooth': len(first) == w.length - v.length,
        'opposite_smooth': len(second) == high.length - low.length,
    }


def permutation_flag_in_fiber(w, shape):
    return symgroup_service.is_min_coset(w, shape)


def k_component_dual(subset, n):
    """σ(I)∨ from the colour-change rule on the 2-colouring of [n] by I"""
    subset = frozenset(subset)
    bad = sorted(x for x in subset if not 1 <= x <= n)
    if bad:
        raise ElementOutOfRange(f"Elements {bad} lie outside [1, {n}]")
    remaining = list(range(1, n + 1))
    rows = []
    while remaining:
        row = [remaining[0]]
        for prev, x in zip(remaining, remaining[1:]):
            if (prev in subset) != (x in subset):
                row.append(x)
        rows.append(row)
        remaining = [x for x in remaining if x not in row]
    return tableau_from_rows(rows)


def k_component_tableau(subset, n):
    """σ(I), the evacuation of the colour-change tableau"""
    return evacuation_service.evacuate(k_component_dual(subset, n)).result


def k_component_classes(n):
    """One subset per class {I, [n] \\ I}: those not containing n"""
    base = range(1, n)
    return [
        frozenset(c)
        for size in range(n)
        for c in combinations(base, size)
    ]


def is_pr_richardson_component(sigma):
    """Every prime factor is a single column 12...m"""
    word = sigma.word
    if not richardson_service.is_richardson_word(word):
        raise NotRichardson(f"{sigma} is not a Richardson tableau")
    return all(
        factor == tuple(range(1, len(factor) + 1))
        for factor in richardson_service.prime_decomposition(word)
    )


def singular_witnesses():
    """Two non-Richardson tableaux whose components are singular"""
    return [
        tableau_from_rows([[1, 3], [2, 5], [4], [6]]),
        tableau_from_rows([[1, 2, 5], [3, 4], [6, 7]]),
    ]
