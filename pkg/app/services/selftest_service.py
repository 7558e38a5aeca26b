"""Oracle cross-checks run by `rt selftest`"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from math import comb

from app.config import get_limit
from app.errors import ConsistencyError
from app.models import Partition, Permutation, partitions_of
from app.services import (
    enumeration_service,
    evacuation_service,
    guemes_service,
    richardson_service,
    springer_service,
    symgroup_service,
    tableau_service,
)

logger = logging.getLogger(__name__)


class Tally:
    """Counts checks and keeps a bounded sample of failures"""

    def __init__(self, name):
        self.name = name
        self.checks = 0
        self.failures = []

    def check(self, ok, detail):
        self.checks += 1
        if not ok:
            self.failures.append(detail() if callable(detail) else detail)

    def to_dict(self):
        return {
            'checks': self.checks,
            'failed': len(self.failures),
            'failures': self.failures[:5],
        }


def _tableaux(max_n):
    for n in range(max_n + 1):
        yield from tableau_service.all_syt(n, limit=max_n)


def suite_round_trip(max_n, tally):
    for sigma in _tableaux(max_n):
        tally.check(tableau_service.tableau_from_word(sigma.word) == sigma, str(sigma))
        tally.check(tableau_service.tableau_from_rows(sigma.rows) == sigma, str(sigma))
        tally.check(tableau_service.is_standard_grid(sigma.rows), f"grid {sigma}")


def suite_characterizations(max_n, tally):
    for sigma in _tableaux(max_n):
        verdicts = richardson_service.characterizations(sigma)
        tally.check(len(set(verdicts.values())) == 1, lambda: f"{sigma}: {verdicts}")
    for sigma in springer_service.singular_witnesses():
        tally.check(not richardson_service.is_richardson_def(sigma), f"witness {sigma}")


def suite_evacuation(max_n, tally):
    for sigma in _tableaux(max_n):
        dual = evacuation_service.evacuate(sigma).result
        tally.check(evacuation_service.evacuate(dual).result == sigma, f"involution {sigma}")
        tally.check(dual.shape == sigma.shape, f"shape {sigma}")
        if sigma.n:
            smaller, _ = evacuation_service.slide(dual)
            expected = evacuation_service.evacuate(tableau_service.delete_largest(sigma)).result
            tally.check(smaller == expected, f"deletion {sigma}")
        if sigma.shape.is_hook():
            tally.check(evacuation_service.evacuate_hook(sigma) == dual, f"hook {sigma}")


def suite_concatenation(max_n, tally):
    for total in range(max_n + 1):
        for a in range(total + 1):
            for left in tableau_service.all_syt(a, limit=max_n):
                left_dual = evacuation_service.evacuate(left).result
                for right in tableau_service.all_syt(total - a, limit=max_n):
                    glued = tableau_service.concat(left, right)
                    right_dual = evacuation_service.evacuate(right).result
                    tally.check(
                        evacuation_service.evacuate(glued).result == tableau_service.concat(right_dual, left_dual),
                        f"evac {left} ∘ {right}",
                    )
                    tally.check(
                        tableau_service.crop(glued)
                        == tableau_service.concat(tableau_service.crop(left), tableau_service.crop(right)),
                        f"crop {left} ∘ {right}",
                    )
    words = {n: richardson_service.richardson_words_bounded(n, n) for n in range(max_n + 1)}
    for total in range(max_n + 1):
        for a in range(total + 1):
            for left in words[a]:
                for right in words[total - a]:
                    tally.check(richardson_service.is_richardson_word(left + right), f"closure {left} ∘ {right}")


def suite_statistics(max_n, tally):
    for sigma in _tableaux(max_n):
        if richardson_service.is_richardson_def(sigma):
            tally.check(
                tableau_service.maj(sigma) == comb(sigma.n, 2) - tableau_service.sumone(sigma.word),
                f"maj {sigma}",
            )
        w = springer_service.reading_w(sigma)
        _, q_tab = tableau_service.rs_insert(w)
        tally.check(q_tab == evacuation_service.evacuate(sigma).result, f"RS Q {sigma}")
        p_tab, _ = tableau_service.rs_insert(tableau_service.reading_permutation(sigma, bottom_up=True))
        tally.check(p_tab == sigma, f"RS P {sigma}")
    for n in range(max_n + 1):
        for word in product((1, 2), repeat=n):
            inversions = sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])
            tally.check(
                inversions == tableau_service.sumone(word) - comb(word.count(1), 2),
                f"sumone {word}",
            )


def suite_counts(max_n, tally):
    for n in range(max_n + 1):
        total = 0
        for shape in partitions_of(n):
            syt = tableau_service.enumerate_syt(shape, limit=max_n)
            brute = [s for s in syt if richardson_service.is_richardson_def(s)]
            count = enumeration_service.count_richardson(shape)
            total += count
            tally.check(len(brute) == count, f"count {shape}")
            tally.check(len(syt) == tableau_service.hook_length_count(shape), f"hooks {shape}")
            tally.check(
                sorted(s.word for s in brute) == richardson_service.richardson_words(shape),
                f"generation {shape}",
            )
            tally.check(
                enumeration_service.q_count_brute(shape) == enumeration_service.q_count_richardson(shape),
                f"q-count {shape}",
            )
        tally.check(total == enumeration_service.motzkin(n), f"Motzkin {n}")
        paths = sum(1 for _ in enumeration_service.motzkin_paths(n))
        tally.check(paths == enumeration_service.motzkin(n), f"Motzkin paths {n}")


def suite_generating_function(max_n, tally):
    """Partitions up to max_n; off-partition vectors and the prime-sum form two sizes lower"""
    for n in range(max_n + 1):
        for shape in partitions_of(n):
            tally.check(
                enumeration_service.gf_coefficient(shape.length, shape.parts)
                == enumeration_service.count_richardson(shape),
                f"gf {shape}",
            )
    small = max(max_n - 2, 0)
    for n in range(small + 1):
        for length in range(1, small + 1):
            for exponent in enumeration_service.exponent_vectors(n, length):
                if list(exponent) != sorted(exponent, reverse=True):
                    tally.check(enumeration_service.gf_coefficient(length, exponent) == 0, f"gf {exponent}")
                if length <= 4:
                    _, biggest = enumeration_service.richardson_series(length, exponent)
                    _, other = enumeration_service.richardson_series_by_prime_sum(length, exponent)
                    tally.check(biggest[length] == other[length], f"prime-sum form {exponent}")


def suite_bruhat(max_n, tally):
    exhaustive = min(max_n, get_limit('SELFTEST_BRUHAT_EXHAUSTIVE_N'))
    for n in range(1, exhaustive + 1):
        perms = symgroup_service.all_permutations(n)
        w0 = symgroup_service.longest_element(n)
        projections = [
            (shape, {w: symgroup_service.min_coset_rep(w, shape) for w in perms})
            for shape in partitions_of(n)
        ]
        for v in perms:
            tally.check(symgroup_service.from_lehmer(symgroup_service.lehmer_code(v)) == v, f"code {v}")
            for w in perms:
                leq = symgroup_service.bruhat_leq(v, w)
                tally.check(leq == symgroup_service.bruhat_leq_closure(v, w), f"{v} <= {w}")
                tally.check(symgroup_service.bruhat_leq(v.inverse, w.inverse) == leq, f"inverse {v} {w}")
                tally.check(symgroup_service.bruhat_leq(w0 * v * w0, w0 * w * w0) == leq, f"conjugate {v} {w}")
                tally.check(
                    symgroup_service.bruhat_leq(
                        symgroup_service.right_multiply_longest(w), symgroup_service.right_multiply_longest(v)
                    ) == leq,
                    f"reversal {v} {w}",
                )
                if leq:
                    for shape, rep in projections:
                        tally.check(symgroup_service.bruhat_leq(rep[v], rep[w]), f"projection {shape} {v} {w}")
    rng = random.Random(0)
    pairs = get_limit('SELFTEST_RANDOM_PAIRS')
    top = min(max_n, get_limit('SELFTEST_CLOSURE_MAX_N'))
    for n in range(exhaustive + 1, top + 1):
        values = list(range(1, n + 1))
        for _ in range(pairs):
            v = Permutation(tuple(rng.sample(values, n)))
            w = Permutation(tuple(rng.sample(values, n)))
            tally.check(
                symgroup_service.bruhat_leq(v, w) == symgroup_service.bruhat_leq_closure(v, w),
                f"{v} <= {w}",
            )


def suite_reading_words(max_n, tally):
    for sigma in _tableaux(max_n):
        v, w = springer_service.reading_v(sigma), springer_service.reading_w(sigma)
        shape = sigma.shape
        dual = evacuation_service.evacuate(sigma).result
        tally.check(symgroup_service.bruhat_leq(v, w), f"v <= w {sigma}")
        tally.check(
            springer_service.reading_v(dual)
            == symgroup_service.w0_young(shape) * symgroup_service.right_multiply_longest(w),
            f"v/w relation {sigma}",
        )
        tally.check(
            springer_service.lehmer_w_direct(sigma) == symgroup_service.lehmer_code(w),
            f"Lehmer {sigma}",
        )
        tally.check(springer_service.length_gap(sigma) >= tableau_service.n_lambda(shape), f"gap {sigma}")
        if sigma.n:
            smaller = tableau_service.delete_largest(sigma)
            k = sigma.row_of(sigma.n)
            head = sum(shape.parts[:k - 1])
            tally.check(
                w.length - springer_service.reading_w(smaller).length == head,
                f"w induction {sigma}",
            )
            path = evacuation_service.evacuate(dual).paths[0]
            columns = evacuation_service.slide_columns(path)
            expected = head - 2 * sum(columns.get(i, 0) for i in range(1, k)) + k - 1
            tally.check(
                v.length - springer_service.reading_v(smaller).length == expected,
                f"v induction {sigma}",
            )


def suite_smoothness(max_n, tally):
    for sigma in _tableaux(max_n):
        if not richardson_service.is_richardson_def(sigma):
            continue
        v, w = springer_service.reading_v(sigma), springer_service.reading_w(sigma)
        top = tableau_service.n_lambda(sigma.shape)
        tally.check(springer_service.richardson_smooth(v, w), f"smooth {sigma}")
        evac_pairs = springer_service.reflection_pairs_tableau(sigma, 'evac')
        plain_pairs = springer_service.reflection_pairs_tableau(sigma, 'plain')
        tally.check(springer_service.deodhar_set(v, w) == evac_pairs, f"evac pairs {sigma}")
        low = symgroup_service.right_multiply_longest(w)
        high = symgroup_service.right_multiply_longest(v)
        tally.check(springer_service.deodhar_set(low, high) == plain_pairs, f"plain pairs {sigma}")
        tally.check(len(evac_pairs) == top == len(plain_pairs), f"pair count {sigma}")


def suite_cells(max_n, tally):
    limit = min(max_n, get_limit('CELLS_MAX_SIZE'))
    for n in range(limit + 1):
        for shape in partitions_of(n):
            tops = {(c.v, c.w) for c in springer_service.top_cells(shape, limit=limit)}
            envelopes = {
                (springer_service.reading_v(s), springer_service.reading_w(s))
                for s in tableau_service.enumerate_syt(shape, limit=limit)
                if richardson_service.is_richardson_def(s)
            }
            tally.check(tops == envelopes, f"top cells {shape}")


def suite_primes(max_n, tally):
    for n in range(1, max_n + 1):
        words = richardson_service.richardson_words_bounded(n, n)
        primes = [r for r in words if richardson_service.is_prime(r)]
        tally.check(primes == richardson_service.prime_words(n), f"prime recursion {n}")
        for r in words:
            tally.check(
                richardson_service.is_prime(r) == richardson_service.is_prime_by_factoring(r),
                f"prime test {r}",
            )
            factors = richardson_service.prime_decomposition(r)
            tally.check(sum(factors, ()) == r, f"factors {r}")
            tally.check(
                all(richardson_service.is_richardson_word(f) and richardson_service.is_prime(f) for f in factors),
                f"prime factors {r}",
            )
        for r in primes:
            dual = evacuation_service.evacuate(tableau_service.tableau_from_word(r)).result.word
            tally.check(richardson_service.is_prime(dual) and max(dual) == max(r), f"prime evac {r}")
            if max(r) >= 2:
                image = richardson_service.psi(r)
                tally.check(richardson_service.psi_inverse(image, max(r)) == r, f"psi {r}")
                tally.check(sorted(image + (max(r) - 1, max(r))) == sorted(r), f"psi letters {r}")
                shape = tableau_service.tableau_from_word(r).shape
                tally.check(len(r) == 1 or shape.parts[-2:] == (1, 1), f"last rows {r}")
    for size in range(max(max_n - 1, 0)):
        for mu in partitions_of(size):
            shape = Partition(mu.parts + (1, 1))
            domain = [r for r in richardson_service.richardson_words(shape) if richardson_service.is_prime(r)]
            images = [richardson_service.psi(r) for r in domain]
            tally.check(
                sorted(images) == richardson_service.richardson_words(mu) and len(set(images)) == len(domain),
                f"psi bijection {mu}",
            )


def suite_special_shapes(max_n, tally):
    top = max(max_n, get_limit('SELFTEST_SHAPES_MAX_N'))
    for n in range(top + 1):
        for shape in partitions_of(n):
            if not (shape.is_rectangle() or shape.is_hook() or shape.length == 2):
                continue
            syt = tableau_service.enumerate_syt(shape, limit=top)
            richardson = [s.rows for s in syt if richardson_service.is_richardson_def(s)]
            if shape.is_rectangle():
                columns = tuple(tuple(range(i, n + 1, shape.length)) for i in range(1, shape.length + 1))
                tally.check(richardson == [columns], f"rectangle {shape}")
            if shape.is_hook():
                tally.check(len(richardson) == len(syt), f"hook {shape}")
            if shape.length == 2:
                a, b = shape.parts
                tally.check(len(richardson) == comb(a, b), f"two rows {shape}")


def suite_refinement(max_n, tally):
    top = get_limit('SELFTEST_REFINE_MAX_N')
    for n in range(top + 1):
        try:
            counts, total = enumeration_service.motzkin_refinement_check(n, limit=top)
        except ConsistencyError as e:
            tally.check(False, f"refine {n}: {e}")
            continue
        tally.check(total == enumeration_service.motzkin(n), f"refine {n}")
        tally.check(len(counts) == sum(1 for _ in partitions_of(n)), f"refine shapes {n}")


def suite_k_components(max_n, tally):
    for n in range(1, max_n + 1):
        full = frozenset(range(1, n + 1))
        for subset in springer_service.k_component_classes(n):
            sigma = springer_service.k_component_tableau(subset, n)
            tally.check(richardson_service.is_richardson_def(sigma), f"K {n} {sorted(subset)}")
            tally.check(
                springer_service.k_component_tableau(full - subset, n) == sigma,
                f"complement {n} {sorted(subset)}",
            )


def suite_guemes(max_n, tally):
    for n in range(1, min(max_n, 7) + 1):
        for k in range(1, n + 1):
            shape = Partition((k,) + (1,) * (n - k))
            for sigma in tableau_service.enumerate_syt(shape, limit=n):
                v, w = springer_service.reading_v(sigma), springer_service.reading_w(sigma)
                degree = v.length + symgroup_service.left_multiply_longest(w).length
                terms = guemes_service.hook_expansion(sigma)
                tally.check(bool(terms), f"empty expansion {sigma}")
                for u in terms:
                    tally.check(u.length == degree, f"degree {sigma} {u}")


SUITES = {
    'round_trip': suite_round_trip,
    'characterizations': suite_characterizations,
    'evacuation': suite_evacuation,
    'concatenation': suite_concatenation,
    'statistics': suite_statistics,
    'counts': suite_counts,
    'generating_function': suite_generating_function,
    'bruhat': suite_bruhat,
    'reading_words': suite_reading_words,
    'smoothness': suite_smoothness,
    'cells': suite_cells,
    'primes': suite_primes,
    'special_shapes': suite_special_shapes,
    'refinement': suite_refinement,
    'k_components': suite_k_components,
    'guemes': suite_guemes,
}


def _run_suite(name, max_n):
    tally = Tally(name)
    SUITES[name](max_n, tally)
    level = logging.INFO if not tally.failures else logging.ERROR
    logger.log(level, "suite %s: %d checks, %d failed", name, tally.checks, len(tally.failures))
    return tally


def run_selftest(max_n=None, workers=None, suites=None):
    """Run the oracle suites; returns name -> Tally in a fixed order"""
    max_n = get_limit('SELFTEST_MAX_N') if max_n is None else max_n
    workers = get_limit('SELFTEST_WORKERS') if workers is None else workers
    names = list(suites or SUITES)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(lambda name: _run_suite(name, max_n), names))
    else:
        tallies = [_run_suite(name, max_n) for name in names]
    return dict(zip(names, tallies))
