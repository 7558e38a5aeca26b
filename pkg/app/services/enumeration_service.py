"""Exact counts, q-counts, Motzkin numbers and generating functions"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from sympy import ZZ
from sympy.polys.rings import ring

from app.config import get_limit
from app.errors import SizeLimitExceeded
from app.models import Partition, QPolynomial, partitions_of

logger = logging.getLogger(__name__)


def _tail_sums(parts):
    """tails[i] = λ_{i+1} + λ_{i+2} + ... (0-indexed)"""
    tails = [0] * (len(parts) + 1)
    for i in range(len(parts) - 1, -1, -1):
        tails[i] = tails[i + 1] + parts[i]
    return tails


def _binomial_pairs(shape):
    """(λ_i + λ_{i+2} + ... + λ_ℓ, λ_{i+1} + ... + λ_ℓ) for i = 1..ℓ-1"""
    parts = Partition(tuple(shape)).parts
    tails = _tail_sums(parts)
    return [(parts[i] + tails[i + 2], tails[i + 1]) for i in range(len(parts) - 1)]


def count_richardson(shape):
    """Number of Richardson tableaux of the shape"""
    total = 1
    for top, bottom in _binomial_pairs(shape):
        total *= comb(top, bottom)
    return total


def q_integer(n):
    """[n]_q = 1 + q + ... + q^{n-1}"""
    return QPolynomial.from_coeffs((1,) * n)


def q_factorial(n):
    result = QPolynomial.constant(1)
    for k in range(1, n + 1):
        result = result * q_integer(k)
    return result


@lru_cache(maxsize=None)
def q_binomial(n, k):
    """Gaussian binomial via [n, k] = [n-1, k-1] + q^k [n-1, k]"""
    if k < 0 or k > n:
        return QPolynomial.zero()
    if k == 0 or k == n:
        return QPolynomial.constant(1)
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_count_richardson(shape):
    """Σ q^{maj(σ)} over Richardson σ of the shape, in closed form"""
    parts = Partition(tuple(shape)).parts
    exponent = sum(
        parts[i] * parts[j]
        for i in range(1, len(parts))
        for j in range(i, len(parts))
    )
    result = QPolynomial.monomial(exponent)
    for top, bottom in _binomial_pairs(parts):
        result = result * q_binomial(top, bottom)
    return result


def q_count_brute(shape):
    """Σ q^{maj(σ)} over the generated Richardson words of the shape"""
    from app.services.richardson_service import richardson_words
    from app.services.tableau_service import maj, tableau_from_word

    terms = {}
    for word in richardson_words(shape):
        e = maj(tableau_from_word(word))
        terms[e] = terms.get(e, 0) + 1
    return QPolynomial.from_dict(terms)


@lru_cache(maxsize=None)
def motzkin(n):
    """M_n = M_{n-1} + Σ_{k=0}^{n-2} M_k M_{n-2-k}"""
    table = [1, 1]
    for m in range(2, n + 1):
        table.append(table[m - 1] + sum(table[k] * table[m - 2 - k] for k in range(m - 1)))
    return table[n]


def motzkin_paths(n):
    """Yield Motzkin paths as step strings over U, D, F"""
    def walk(prefix, height):
        remaining = n - len(prefix)
        if remaining == 0:
            if height == 0:
                yield ''.join(prefix)
            return
        if height + 1 <= remaining - 1:
            prefix.append('U')
            yield from walk(prefix, height + 1)
            prefix.pop()
        if height <= remaining - 1:
            prefix.append('F')
            yield from walk(prefix, height)
            prefix.pop()
        if height > 0:
            prefix.append('D')
            yield from walk(prefix, height - 1)
            prefix.pop()

    yield from walk([], 0)


def motzkin_refinement_check(n, limit=None):
    """Per-partition Richardson counts of n together with their total"""
    from app.errors import ConsistencyError

    limit = get_limit('REFINE_MAX_SIZE') if limit is None else limit
    if n > limit:
        raise SizeLimitExceeded(f"n = {n} exceeds the refinement limit {limit}")
    counts = [(shape, count_richardson(shape)) for shape in partitions_of(n)]
    total = sum(c for _, c in counts)
    if total != motzkin(n):
        raise ConsistencyError(f"Σ counts = {total} but M_{n} = {motzkin(n)}")
    return counts, total


@lru_cache(maxsize=None)
def involutions(n):
    """T_n = T_{n-1} + (n-1) T_{n-2}"""
    table = [1, 1]
    for m in range(2, n + 1):
        table.append(table[m - 1] + (m - 1) * table[m - 2])
    return table[n]


def richardson_proportion(n):
    return Fraction(motzkin(n), involutions(n))


@lru_cache(maxsize=None)
def _series_ring(k):
    """The sparse sympy ring ZZ[x1, ..., xk]"""
    return ring(','.join(f'x{i}' for i in range(1, k + 1)), ZZ)[0]


class TruncatedSeries:
    """Multivariate power series over ZZ with the degree of x_i capped at caps[i]"""

    def __init__(self, caps, poly=None):
        self.caps = tuple(caps)
        self.ring = _series_ring(len(self.caps))
        poly = self.ring.zero if poly is None else poly
        self.poly = self.ring.from_dict({
            e: c for e, c in poly.items()
            if all(d <= cap for d, cap in zip(e, self.caps))
        })

    @classmethod
    def one(cls, caps):
        return cls(caps, _series_ring(len(caps)).one)

    @classmethod
    def zero(cls, caps):
        return cls(caps)

    @classmethod
    def variable(cls, caps, i):
        """x_i, with i 1-indexed"""
        return cls(caps, _series_ring(len(caps)).gens[i - 1])

    def __add__(self, other):
        return TruncatedSeries(self.caps, self.poly + other.poly)

    def __neg__(self):
        return TruncatedSeries(self.caps, -self.poly)

    def __sub__(self, other):
        return TruncatedSeries(self.caps, self.poly - other.poly)

    def __mul__(self, other):
        return TruncatedSeries(self.caps, self.poly * other.poly)

    def geometric(self):
        """1 / (1 - self); self must have no constant term"""
        if self.coefficient((0,) * len(self.caps)):
            raise ValueError("geometric() needs a series without constant term")
        total = TruncatedSeries.one(self.caps)
        power = TruncatedSeries.one(self.caps)
        while True:
            power = power * self
            if power.poly.is_zero:
                return total
            total = total + power

    def coefficient(self, exponent):
        return int(self.poly.get(tuple(exponent), 0))

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.poly == other.poly


def richardson_series(ell, caps):
    """(P_1..P_ℓ, R_{-1}..R_ℓ) truncated at caps, from the prime/biggest recurrences"""
    one = TruncatedSeries.one(caps)
    primes = {}
    biggest = {-1: TruncatedSeries.zero(caps), 0: one}
    for k in range(1, ell + 1):
        if k == 1:
            primes[1] = TruncatedSeries.variable(caps, 1)
        else:
            primes[k] = primes[k - 1] * biggest[k - 2] * TruncatedSeries.variable(caps, k)
        biggest[k] = biggest[k - 1] * (primes[k] * biggest[k - 1]).geometric()
    return primes, biggest


def richardson_series_by_prime_sum(ell, caps):
    """The same series from P_ℓ = (R_{ℓ-2} - R_{ℓ-3})·x_{ℓ-1}x_ℓ and R_ℓ = 1/(1 - (P_1 + ... + P_ℓ))"""
    primes = {}
    biggest = {-1: TruncatedSeries.zero(caps), 0: TruncatedSeries.one(caps)}
    prime_sum = TruncatedSeries.zero(caps)
    for k in range(1, ell + 1):
        if k == 1:
            primes[1] = TruncatedSeries.variable(caps, 1)
        else:
            primes[k] = (
                (biggest[k - 2] - biggest[k - 3])
                * TruncatedSeries.variable(caps, k - 1)
                * TruncatedSeries.variable(caps, k)
            )
        prime_sum = prime_sum + primes[k]
        biggest[k] = prime_sum.geometric()
    return primes, biggest


def gf_coefficient(ell, exponent):
    """Coefficient of x^α in the generating function of Richardson words on [ℓ]"""
    exponent = tuple(exponent)
    if any(a < 0 for a in exponent):
        return 0
    if len(exponent) > ell:
        if any(exponent[ell:]):
            return 0
        exponent = exponent[:ell]
    if ell == 0:
        return 1 if not any(exponent) else 0
    caps = exponent + (0,) * (ell - len(exponent))
    _, biggest = richardson_series(ell, caps)
    return biggest[ell].coefficient(caps)


def exponent_vectors(size, length):
    """All exponent vectors of the given length summing to size"""
    return [e for e in product(range(size + 1), repeat=length) if sum(e) == size]
