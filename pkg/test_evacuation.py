#!/usr/bin/env python3
"""
Evacuation tests: slides, L-slides, hooks and the newrow operation

Usage: pytest test_evacuation.py
"""
import pytest

from app.errors import LetterMismatch, NotHookShape
from app.models import Partition, SlidePath, StandardTableau
from app.services import evacuation_service, tableau_service
from conftest import word_of

BIG_ROWS = [[1, 2, 5, 13], [3, 4, 9, 15], [6, 8, 11], [7, 12, 14], [10, 16]]


def test_evacuation_of_sixteen_box_tableau():
    sigma = tableau_service.tableau_from_rows(BIG_ROWS)
    trace = evacuation_service.evacuate(sigma)
    assert trace.result.rows == (
        (1, 3, 5, 7), (2, 6, 9, 10), (4, 11, 14), (8, 13, 16), (12, 15)
    )
    first = trace.paths[0]
    assert [col for _, col in first.cells] == [1, 2, 2, 2, 3, 3]
    assert [row for row, _ in first.cells] == [1, 1, 2, 3, 3, 4]
    assert not evacuation_service.is_L_slide(first)
    assert len(trace.paths) == 16


def test_evacuation_of_running_example():
    sigma = tableau_service.tableau_from_word(word_of('12113123'))
    dual = evacuation_service.evacuate(sigma).result
    assert dual.word == word_of('12312113')
    assert dual.rows == ((1, 4, 6, 7), (2, 5), (3, 8))


def test_one_row_is_fixed():
    sigma = tableau_service.tableau_from_word(word_of('11111'))
    trace = evacuation_service.evacuate(sigma)
    assert trace.result == sigma
    for path in trace.paths:
        assert all(row == 1 for row, _ in path.cells)
        assert evacuation_service.is_L_slide(path)


def test_empty_evacuation():
    trace = evacuation_service.evacuate(StandardTableau(()))
    assert trace.result.n == 0
    assert trace.paths == ()


def test_slide_decrements_entries():
    sigma = tableau_service.tableau_from_word(word_of('12113123'))
    smaller, path = evacuation_service.slide(sigma)
    assert smaller.n == 7
    assert path.cells[0] == (1, 1)
    assert sorted(x for row in smaller.rows for x in row) == list(range(1, 8))


def test_is_L_slide():
    assert evacuation_service.is_L_slide(SlidePath(((1, 1), (2, 1), (3, 1), (3, 2), (3, 3))))
    assert evacuation_service.is_L_slide(SlidePath(((1, 1),)))
    assert not evacuation_service.is_L_slide(SlidePath(((1, 1), (1, 2), (2, 2))))


def test_all_slides_L():
    assert evacuation_service.all_slides_L(tableau_service.tableau_from_word(word_of('123123411213')))
    assert not evacuation_service.all_slides_L(tableau_service.tableau_from_word(word_of('1122')))
    assert evacuation_service.all_slides_L(tableau_service.tableau_from_word(word_of('1111')))


def test_slide_columns():
    path = SlidePath(((1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (4, 3)))
    assert evacuation_service.slide_columns(path) == {1: 2, 2: 2, 3: 3, 4: 3}


def test_evacuation_is_shape_preserving_involution():
    for n in range(7):
        for sigma in tableau_service.all_syt(n):
            dual = evacuation_service.evacuate(sigma).result
            assert dual.shape == sigma.shape
            assert evacuation_service.evacuate(dual).result == sigma


def test_evacuation_reverses_concatenation():
    def tab(text):
        return tableau_service.tableau_from_word(word_of(text))

    left, right = tab('12113'), tab('123')
    glued = evacuation_service.evacuate(tableau_service.concat(left, right)).result
    expected = tableau_service.concat(
        evacuation_service.evacuate(right).result,
        evacuation_service.evacuate(left).result,
    )
    assert glued == expected


def test_evacuate_hook_matches_slides():
    for shape in [(1,), (3, 1, 1), (2, 1, 1, 1), (4, 1, 1)]:
        for sigma in tableau_service.enumerate_syt(Partition(shape)):
            assert evacuation_service.evacuate_hook(sigma) == evacuation_service.evacuate(sigma).result


def test_evacuate_hook_rejects_other_shapes():
    with pytest.raises(NotHookShape):
        evacuation_service.evacuate_hook(tableau_service.tableau_from_word(word_of('1122')))


def test_newrow():
    assert evacuation_service.newrow(word_of('12113123'), 3) == word_of('123114123')
    assert evacuation_service.newrow(word_of('1'), 1) == word_of('12')
    dual = evacuation_service.evacuate(tableau_service.tableau_from_word(word_of('121131234'))).result
    assert dual.word == evacuation_service.newrow(word_of('12312113'), 3)
    with pytest.raises(LetterMismatch):
        evacuation_service.newrow(word_of('1213'), 2)
