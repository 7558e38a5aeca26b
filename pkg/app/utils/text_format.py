"""Parsing and formatting of the textual input formats"""
from app.errors import InvalidPermutation, ParseError
from app.models import Partition, Permutation, QPolynomial
from app.models.tableau import format_letters


def parse_letters(text):
    """Parse a digit string ("12113123") or a comma list ("1,2,1,1")"""
    text = (text or '').strip()
    if text == '' or text == '-':
        return ()
    try:
        if ',' in text:
            return tuple(int(part) for part in text.split(','))
        if not text.isdigit():
            raise ValueError(text)
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise ParseError(f"Cannot parse {text!r} as a word") from None


def parse_word(text):
    """Parse a word whose letters are positive integers"""
    word = parse_letters(text)
    if any(letter < 1 for letter in word):
        raise ParseError(f"Word letters must be positive: {text!r}")
    return word


def parse_partition(text):
    """Parse comma-separated parts such as "4,2,2" """
    text = (text or '').strip()
    if text == '' or text == '-':
        return Partition(())
    try:
        parts = tuple(int(part) for part in text.split(','))
    except ValueError:
        raise ParseError(f"Cannot parse {text!r} as a partition") from None
    return Partition(parts)


def parse_permutation(text):
    """Parse "7,5,1,8,2,3,6,4" or, for n <= 9, "75182364" """
    images = parse_letters(text)
    try:
        return Permutation(images)
    except InvalidPermutation as e:
        raise ParseError(str(e)) from None


def parse_subset(text):
    """Parse a comma-separated subset; the empty string is the empty set"""
    text = (text or '').strip()
    if text in ('', '-', '{}'):
        return frozenset()
    try:
        return frozenset(int(part) for part in text.strip('{}').split(','))
    except ValueError:
        raise ParseError(f"Cannot parse {text!r} as a subset") from None


def format_word(word):
    return format_letters(tuple(word))


def format_permutation(w):
    return str(w)


def format_qpolynomial(p: QPolynomial):
    return str(p)


def format_rows(rows):
    """Render rows as "(1,3,4,6),(2,7),(5,8)" """
    return ','.join('(' + ','.join(str(x) for x in row) + ')' for row in rows)
