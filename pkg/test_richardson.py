#!/usr/bin/env python3
"""
Richardson recognition, prime factorization, Ψ and generation tests

Usage: pytest test_richardson.py
"""
from math import comb

import pytest

from app.errors import EmptyWord, LargestLetterTooSmall, LetterMismatch, NotPrime, NotRichardson
from app.models import Partition, StandardTableau, partitions_of
from app.services import richardson_service, tableau_service
from conftest import word_of

SIGMA = word_of('12113123')
TAU = word_of('11213213')


def tab(text):
    return tableau_service.tableau_from_word(word_of(text))


def test_definition():
    assert richardson_service.is_richardson_def(tab('12113123'))
    assert not richardson_service.is_richardson_def(tab('11213213'))
    assert richardson_service.is_richardson_def(StandardTableau(()))


def test_failure_is_at_entry_six():
    tau = tab('11213213')
    assert richardson_service.is_richardson_def(tableau_service.restrict(tau, 5))
    assert not richardson_service.is_richardson_def(tableau_service.restrict(tau, 6))


def test_word_criterion():
    assert richardson_service.is_richardson_word(SIGMA)
    assert not richardson_service.is_richardson_word(TAU)
    assert not richardson_service.is_richardson_word(word_of('1122'))
    assert not richardson_service.is_richardson_word(word_of('211'))
    assert richardson_service.is_richardson_word(())


def test_crop_criterion():
    assert richardson_service.is_richardson_crop(tab('12113123'))
    assert not richardson_service.is_richardson_crop(tab('1122'))
    assert richardson_service.is_richardson_crop(tab('1111'))


def test_strong_form_agrees():
    for n in range(10):
        for sigma in tableau_service.all_syt(n):
            assert richardson_service.is_richardson_strong(sigma) == richardson_service.is_richardson_def(sigma)


def test_characterizations_agree():
    for n in range(10):
        for sigma in tableau_service.all_syt(n):
            verdicts = richardson_service.characterizations(sigma)
            assert len(set(verdicts.values())) == 1, (sigma.word, verdicts)


def test_characterizations_keys():
    verdicts = richardson_service.characterizations(tab('12113123'))
    assert list(verdicts) == [
        'definition', 'strong', 'word', 'crop', 'lslides', 'evacuation', 'gap', 'bruhat'
    ]
    assert all(verdicts.values())


def test_two_row_rule():
    """Two rows: Richardson iff no two consecutive entries sit in row 2"""
    for n in range(11):
        for shape in partitions_of(n):
            if shape.length != 2:
                continue
            for sigma in tableau_service.enumerate_syt(shape):
                second = set(sigma.rows[1])
                expected = not any(j + 1 in second for j in second)
                assert richardson_service.is_richardson_def(sigma) == expected


def test_special_shapes():
    for n in range(11):
        for shape in partitions_of(n):
            if shape.is_rectangle():
                richardson = [
                    s for s in tableau_service.enumerate_syt(shape)
                    if richardson_service.is_richardson_def(s)
                ]
                assert len(richardson) == 1
                assert richardson[0].rows == tuple(
                    tuple(range(i, n + 1, shape.length)) for i in range(1, shape.length + 1)
                )
            if shape.is_hook():
                for sigma in tableau_service.enumerate_syt(shape):
                    assert richardson_service.is_richardson_def(sigma)


def test_hook_primes_have_two_and_n_in_first_column():
    for n in range(2, 11):
        for k in range(1, n + 1):
            shape = Partition((k,) + (1,) * (n - k))
            for sigma in tableau_service.enumerate_syt(shape):
                column = sigma.column(1)
                assert richardson_service.is_prime(sigma.word) == (2 in column and n in column)


def test_concatenation_closure():
    words = {n: richardson_service.richardson_words_bounded(n, n) for n in range(10)}
    for total in range(10):
        for a in range(total + 1):
            for left in words[a]:
                for right in words[total - a]:
                    assert richardson_service.is_richardson_word(left + right)


def test_prime_factors_are_prime_richardson():
    for n in range(1, 10):
        for word in richardson_service.richardson_words_bounded(n, n):
            factors = richardson_service.prime_decomposition(word)
            assert sum(factors, ()) == word
            for factor in factors:
                assert richardson_service.is_richardson_word(factor)
                assert richardson_service.is_prime(factor)


def test_prime_tableaux_end_in_two_single_boxes():
    for n in range(2, 11):
        for word in richardson_service.prime_words(n):
            assert tableau_service.tableau_from_word(word).shape.parts[-2:] == (1, 1)


def test_prime_decomposition():
    assert richardson_service.prime_decomposition(word_of('123123411213')) == [
        word_of('123'), word_of('1234'), word_of('1'), word_of('1213')
    ]
    assert richardson_service.prime_decomposition(word_of('1')) == [word_of('1')]
    assert richardson_service.prime_decomposition(SIGMA) == [word_of('12113'), word_of('123')]
    assert richardson_service.prime_decomposition(()) == []
    with pytest.raises(NotRichardson):
        richardson_service.prime_decomposition(TAU)


def test_is_prime():
    assert richardson_service.is_prime(word_of('1213'))
    assert not richardson_service.is_prime(word_of('11'))
    assert richardson_service.is_prime(word_of('1213124'))
    with pytest.raises(EmptyWord):
        richardson_service.is_prime(())
    with pytest.raises(NotRichardson):
        richardson_service.is_prime(word_of('1122'))


def test_prime_test_matches_factoring_oracle():
    for n in range(1, 8):
        for word in richardson_service.richardson_words_bounded(n, n):
            assert richardson_service.is_prime(word) == richardson_service.is_prime_by_factoring(word)


def test_psi():
    assert richardson_service.psi(word_of('1213124')) == word_of('11212')
    assert richardson_service.psi(word_of('12')) == ()
    assert richardson_service.psi(word_of('123')) == word_of('1')


def test_psi_errors():
    with pytest.raises(NotPrime):
        richardson_service.psi(word_of('11'))
    with pytest.raises(NotPrime):
        richardson_service.psi(())
    with pytest.raises(NotPrime):
        richardson_service.psi(word_of('1122'))
    with pytest.raises(LargestLetterTooSmall):
        richardson_service.psi(word_of('1'))


def test_psi_inverse():
    assert richardson_service.psi_inverse(word_of('11212'), 4) == word_of('1213124')
    assert richardson_service.psi_inverse((), 2) == word_of('12')
    assert richardson_service.psi_inverse(word_of('1'), 3) == word_of('123')
    with pytest.raises(LetterMismatch):
        richardson_service.psi_inverse(word_of('12'), 3)
    with pytest.raises(LargestLetterTooSmall):
        richardson_service.psi_inverse((), 1)


def test_psi_round_trip():
    for n in range(2, 11):
        for word in richardson_service.prime_words(n):
            ell = max(word)
            if ell < 2:
                continue
            image = richardson_service.psi(word)
            assert len(image) == n - 2
            assert richardson_service.psi_inverse(image, ell) == word


def test_richardson_extensions():
    shape = Partition((3, 2, 1))
    assert list(richardson_service.richardson_extensions(word_of('112'), shape)) == [
        word_of('112123'), word_of('121123'), word_of('121213'), word_of('121231')
    ]
    assert list(richardson_service.richardson_extensions(word_of('121'), shape)) == [
        word_of('112312'), word_of('121312'), word_of('123112'), word_of('123121')
    ]
    assert list(richardson_service.richardson_extensions((), Partition(()))) == [()]
    assert list(richardson_service.richardson_extensions((), Partition((3,)))) == [word_of('111')]


def test_generation_matches_brute_force():
    for n in range(11):
        for shape in partitions_of(n):
            brute = sorted(
                s.word for s in tableau_service.enumerate_syt(shape)
                if richardson_service.is_richardson_def(s)
            )
            assert richardson_service.richardson_words(shape) == brute


def test_richardson_words():
    assert len(richardson_service.richardson_words(Partition((4, 2, 2)))) == 15
    assert richardson_service.richardson_words(Partition((2, 2))) == [word_of('1212')]
    assert richardson_service.richardson_words(Partition(())) == [()]


def test_prime_words():
    assert richardson_service.prime_words(1) == [word_of('1')]
    assert richardson_service.prime_words(2) == [word_of('12')]
    assert richardson_service.prime_words(3) == [word_of('123')]
    assert richardson_service.prime_words(4) == [word_of('1213'), word_of('1234')]
    for n in range(1, 8):
        brute = [
            w for w in richardson_service.richardson_words_bounded(n, n)
            if richardson_service.is_prime_by_factoring(w)
        ]
        assert richardson_service.prime_words(n) == brute


def test_psi_is_a_bijection_onto_the_smaller_shape():
    for size in range(9):
        for mu in partitions_of(size):
            shape = Partition(mu.parts + (1, 1))
            ell = shape.length
            domain = [
                word for word in richardson_service.richardson_words(shape)
                if richardson_service.is_prime(word)
            ]
            images = [richardson_service.psi(word) for word in domain]
            assert sorted(images) == richardson_service.richardson_words(mu)
            assert len(set(images)) == len(domain)
            for word, image in zip(domain, images):
                assert max(word) == ell
                assert sorted(image + (ell - 1, ell)) == sorted(word)
                assert richardson_service.psi_inverse(image, ell) == word


def test_maj_of_richardson_words():
    """maj(σ) = C(n, 2) - sumone(word(σ)) on Richardson tableaux"""
    for n in range(10):
        for word in richardson_service.richardson_words_bounded(n, n):
            sigma = tableau_service.tableau_from_word(word)
            assert tableau_service.maj(sigma) == comb(n, 2) - tableau_service.sumone(word)
