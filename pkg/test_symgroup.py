#!/usr/bin/env python3
"""
Symmetric group tests: lengths, Lehmer codes, Bruhat order, Young cosets

Usage: pytest test_symgroup.py
"""
import random
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from app.errors import InvalidCode, InvalidPartition, InvalidPermutation, SizeMismatch
from app.models import Composition, Partition, Permutation, partitions_of
from app.services import symgroup_service


def perm(text):
    return Permutation(tuple(int(ch) for ch in text))


permutations_of_7 = st.permutations(list(range(1, 8))).map(lambda p: Permutation(tuple(p)))


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        Permutation((1, 1, 2))


def test_inversions():
    assert symgroup_service.inversions(perm('25341')) == {(1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)}
    assert symgroup_service.length(perm('25341')) == 6
    assert symgroup_service.length(Permutation.identity(5)) == 0
    for n in range(1, 7):
        assert symgroup_service.length(symgroup_service.longest_element(n)) == comb(n, 2)


def test_lehmer_code():
    assert symgroup_service.lehmer_code(perm('75182364')) == (6, 4, 0, 4, 0, 0, 1, 0)
    assert symgroup_service.lehmer_code(Permutation.identity(4)) == (0, 0, 0, 0)
    assert symgroup_service.lehmer_code(Permutation.longest(4)) == (3, 2, 1, 0)


def test_from_lehmer():
    assert symgroup_service.from_lehmer((6, 4, 0, 4, 0, 0, 1, 0)) == perm('75182364')
    with pytest.raises(InvalidCode):
        symgroup_service.from_lehmer((3, 0, 0))
    with pytest.raises(InvalidCode):
        symgroup_service.from_lehmer((0, 0, 1))


@given(permutations_of_7)
def test_lehmer_round_trip(w):
    code = symgroup_service.lehmer_code(w)
    assert symgroup_service.from_lehmer(code) == w
    assert sum(code) == w.length


def test_composition_convention():
    u, v = perm('231'), perm('213')
    assert symgroup_service.compose(u, v) == perm('321')
    assert symgroup_service.inverse(perm('231')) == perm('312')
    with pytest.raises(SizeMismatch):
        symgroup_service.compose(perm('12'), perm('123'))


@given(permutations_of_7, st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=7))
def test_multiplication_shortcuts(w, j, k):
    n = w.n
    assert symgroup_service.left_multiply_simple(j, w) == symgroup_service.simple_transposition(j, n) * w
    i = min(j, k)
    if i != max(j, k):
        t = symgroup_service.transposition(i, max(j, k), n)
        assert symgroup_service.right_multiply_transposition(w, i, max(j, k)) == w * t
    w0 = symgroup_service.longest_element(n)
    assert symgroup_service.left_multiply_longest(w) == w0 * w
    assert symgroup_service.right_multiply_longest(w) == w * w0


def test_bruhat_examples():
    assert symgroup_service.bruhat_leq(perm('15342'), perm('25341'))
    assert symgroup_service.bruhat_leq(perm('15327684'), perm('71582634'))
    assert not symgroup_service.bruhat_leq(perm('25716348'), perm('75182364'))
    with pytest.raises(SizeMismatch):
        symgroup_service.bruhat_leq(perm('12'), perm('123'))


def test_bruhat_matches_closure_exhaustively():
    for n in range(1, 6):
        perms = symgroup_service.all_permutations(n)
        for v, w in product(perms, repeat=2):
            assert symgroup_service.bruhat_leq(v, w) == symgroup_service.bruhat_leq_closure(v, w)


def test_bruhat_matches_closure_on_random_pairs_of_seven():
    rng = random.Random(7)
    values = list(range(1, 8))
    below = 0
    for _ in range(10 ** 4):
        v = Permutation(tuple(rng.sample(values, 7)))
        w = Permutation(tuple(rng.sample(values, 7)))
        verdict = symgroup_service.bruhat_leq(v, w)
        assert verdict == symgroup_service.bruhat_leq_closure(v, w)
        below += verdict
    assert 0 < below < 10 ** 4


@given(st.permutations(list(range(1, 7))), st.permutations(list(range(1, 7))))
def test_bruhat_matches_closure_randomly(a, b):
    v, w = Permutation(tuple(a)), Permutation(tuple(b))
    assert symgroup_service.bruhat_leq(v, w) == symgroup_service.bruhat_leq_closure(v, w)


def test_bruhat_symmetries():
    """Inversion and w₀-conjugation preserve the order; w ↦ w·w₀ and w ↦ w₀·w reverse it"""
    for n in range(1, 6):
        w0 = symgroup_service.longest_element(n)
        perms = symgroup_service.all_permutations(n)
        for v, w in product(perms, repeat=2):
            leq = symgroup_service.bruhat_leq(v, w)
            assert symgroup_service.bruhat_leq(v.inverse, w.inverse) == leq
            assert symgroup_service.bruhat_leq(w0 * v * w0, w0 * w * w0) == leq
            assert symgroup_service.bruhat_leq(
                symgroup_service.right_multiply_longest(w), symgroup_service.right_multiply_longest(v)
            ) == leq
            assert symgroup_service.bruhat_leq(
                symgroup_service.left_multiply_longest(w), symgroup_service.left_multiply_longest(v)
            ) == leq


def test_lex_rank():
    perms = symgroup_service.all_permutations(4)
    assert [symgroup_service.lex_rank(w) for w in perms] == list(range(24))


def test_all_permutations():
    perms = symgroup_service.all_permutations(3)
    assert [str(p) for p in perms] == ['123', '132', '213', '231', '312', '321']
    assert len(symgroup_service.all_permutations(5)) == factorial(5)


def test_w0_young():
    assert symgroup_service.w0_young(Partition((3, 2))) == perm('32154')
    assert symgroup_service.w0_young(Composition((2, 3))) == perm('21543')
    assert symgroup_service.w0_young((1, 3)) == perm('1432')
    assert symgroup_service.w0_young(Partition((1, 1, 1))) == Permutation.identity(3)
    assert symgroup_service.longest_element(5) == perm('54321')


def test_parabolic_factor():
    factor, rep = symgroup_service.parabolic_factor(perm('25341'), Partition((3, 2)))
    assert factor == perm('23154')
    assert rep == perm('14253')
    assert factor * rep == perm('25341')
    e = Permutation.identity(4)
    assert symgroup_service.parabolic_factor(e, Partition((2, 2))) == (e, e)


def test_is_min_coset():
    assert symgroup_service.is_min_coset(perm('75182364'), Partition((4, 2, 2)))
    assert symgroup_service.is_min_coset(perm('14253'), Partition((3, 2)))
    assert not symgroup_service.is_min_coset(perm('21345'), Composition((2, 3)))
    assert symgroup_service.is_min_coset(perm('12345'), (2, 3))
    assert symgroup_service.is_min_coset(Permutation.identity(4), Partition((3, 1)))
    with pytest.raises(SizeMismatch):
        symgroup_service.is_min_coset(perm('123'), Partition((2, 2)))


def test_min_coset_reps():
    shape = Partition((2, 2, 1))
    reps = symgroup_service.min_coset_reps(shape)
    assert len(reps) == factorial(5) // (2 * 2 * 1)
    assert reps == sorted(reps)
    assert all(symgroup_service.is_min_coset(w, shape) for w in reps)
    assert {symgroup_service.min_coset_rep(w, shape) for w in symgroup_service.all_permutations(5)} == set(reps)


def test_parabolic_projection_is_monotone():
    for n in range(1, 6):
        perms = symgroup_service.all_permutations(n)
        for shape in partitions_of(n):
            rep = {w: symgroup_service.min_coset_rep(w, shape) for w in perms}
            for v, w in product(perms, repeat=2):
                if symgroup_service.bruhat_leq(v, w):
                    assert symgroup_service.bruhat_leq(rep[v], rep[w])


def test_parabolic_factor_lengths_add():
    for w in symgroup_service.all_permutations(5):
        for shape in [(3, 2), (2, 3), (1, 2, 2), (5,)]:
            factor, rep = symgroup_service.parabolic_factor(w, shape)
            assert factor * rep == w
            assert factor.length + rep.length == w.length
            assert symgroup_service.is_min_coset(rep, shape)


def test_young_blocks_accept_compositions_only_where_meant():
    assert Composition((2, 3)).blocks == (range(1, 3), range(3, 6))
    assert Composition((2, 3)).partial_sums == (2, 5)
    with pytest.raises(InvalidPartition):
        Partition((2, 3))
    with pytest.raises(InvalidPartition):
        Composition((2, 0))
    with pytest.raises(SizeMismatch):
        symgroup_service.min_coset_rep(perm('123'), Composition((1, 1)))
