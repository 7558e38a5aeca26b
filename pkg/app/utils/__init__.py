"""Utility functions for the tableau toolkit"""

from .text_format import (
    parse_letters,
    parse_word,
    parse_partition,
    parse_permutation,
    parse_subset,
    format_word,
    format_permutation,
    format_qpolynomial,
    format_rows
)

__all__ = [
    'parse_letters',
    'parse_word',
    'parse_partition',
    'parse_permutation',
    'parse_subset',
    'format_word',
    'format_permutation',
    'format_qpolynomial',
    'format_rows'
]
