"""Error types raised by the tableau services"""


class RichardsonError(ValueError):
    """Base class for domain errors; `name` is reported by the CLI and API"""

    @property
    def name(self):
        return type(self).__name__


class ParseError(RichardsonError):
    """Malformed textual input (word, partition, permutation or subset)"""


class InvalidPartition(RichardsonError):
    pass


class InvalidPermutation(RichardsonError):
    pass


class InvalidGuemesTableau(RichardsonError):
    pass


class NotLatticeWord(RichardsonError):
    pass


class IndexOutOfRange(RichardsonError):
    pass


class SizeLimitExceeded(RichardsonError):
    pass


class NotRichardson(RichardsonError):
    pass


class EmptyWord(RichardsonError):
    pass


class NotPrime(RichardsonError):
    pass


class LargestLetterTooSmall(RichardsonError):
    pass


class LetterMismatch(RichardsonError):
    pass


class InvalidCode(RichardsonError):
    pass


class SizeMismatch(RichardsonError):
    pass


class NotComparable(RichardsonError):
    pass


class EntryOutOfRange(RichardsonError):
    pass


class NotHookShape(RichardsonError):
    pass


class ElementOutOfRange(RichardsonError):
    pass


class ConsistencyError(Exception):
    """Two computations that must agree did not"""

    name = 'ConsistencyError'
