"""Richardson tableaux and words: recognition, prime factors, Ψ, generation"""
import logging
from itertools import combinations_with_replacement

from app.errors import (
    EmptyWord,
    LargestLetterTooSmall,
    LetterMismatch,
    NotPrime,
    NotRichardson,
)
from app.models import Partition, StandardTableau, partitions_of
from app.models.tableau import lattice_violation
from app.services.tableau_service import crop

logger = logging.getLogger(__name__)


def is_richardson_def(sigma):
    """For j outside row 1: within σ[j-1], the last entry of the row above j beats every entry from j's row down"""
    word = sigma.word
    for j, row in enumerate(word, start=1):
        if row == 1:
            continue
        prefix = word[:j - 1]
        last_above = max(k for k, r in enumerate(prefix, start=1) if r == row - 1)
        lower = [k for k, r in enumerate(prefix, start=1) if r >= row]
        if lower and max(lower) > last_above:
            return False
    return True


def is_richardson_strong(sigma):
    """Every row above j's row has, within σ[j-1], a largest entry beating all entries from j's row down"""
    word = sigma.word
    for j, row in enumerate(word, start=1):
        if row == 1:
            continue
        prefix = word[:j - 1]
        lower = [k for k, r in enumerate(prefix, start=1) if r >= row]
        if not lower:
            continue
        for upper_row in range(1, row):
            if max(k for k, r in enumerate(prefix, start=1) if r == upper_row) < max(lower):
                return False
    return True


def is_richardson_word(word):
    """Right-to-left scan: before each letter r >= 2, r-1 is met before any letter >= r"""
    word = tuple(word)
    if lattice_violation(word) is not None:
        return False
    for j, letter in enumerate(word):
        if letter < 2:
            continue
        for earlier in reversed(word[:j]):
            if earlier == letter - 1:
                break
            if earlier >= letter:
                return False
    return True


def is_richardson_crop(sigma):
    """Crop recursion: every second-row entry j has j-1 in row 1, and the crop is Richardson"""
    while sigma.shape.length > 1:
        word = sigma.word
        for j, row in enumerate(word, start=1):
            if row == 2 and word[j - 2] != 1:
                return False
        sigma = crop(sigma)
    return True


def _require_richardson(word):
    if not is_richardson_word(word):
        raise NotRichardson(f"{''.join(map(str, word)) or 'ε'} is not a Richardson word")


def prime_decomposition(word):
    """Split a Richardson word into its prime factors, reading right to left"""
    word = tuple(word)
    _require_richardson(word)
    factors = []
    end = len(word)
    while end > 0:
        target = word[end - 1] - 1
        pos = end - 1
        while target >= 1:
            pos -= 1
            while word[pos] != target:
                pos -= 1
            target -= 1
        factors.append(word[pos:end])
        end = pos
    factors.reverse()
    return factors


def is_prime(word):
    """Largest letter once and last; between first j and first j+1 only letters < j"""
    word = tuple(word)
    if not word:
        raise EmptyWord("The empty word is neither prime nor composite here")
    _require_richardson(word)
    ell = max(word)
    if word.count(ell) != 1 or word[-1] != ell:
        return False
    first = {}
    for pos, letter in enumerate(word):
        first.setdefault(letter, pos)
    for j in range(1, ell):
        if any(letter > j - 1 for letter in word[first[j] + 1:first[j + 1]]):
            return False
    return True


def psi(word):
    """Ψ: write r = s∘t∘(ℓ-1)∘u∘ℓ and return t∘s∘u"""
    word = tuple(word)
    if not word or not is_richardson_word(word) or not is_prime(word):
        raise NotPrime(f"{word} is not a prime Richardson word")
    ell = word[-1]
    if ell < 2:
        raise LargestLetterTooSmall("Ψ needs a largest letter of at least 2")
    if ell == 2:
        return ()
    end_s = word.index(ell - 2) + 1
    pos_big = word.index(ell - 1)
    s, t, u = word[:end_s], word[end_s:pos_big], word[pos_big + 1:-1]
    return t + s + u


def psi_inverse(word, ell):
    """Rebuild the prime word with largest letter ℓ from Ψ(r)"""
    word = tuple(word)
    if ell < 2:
        raise LargestLetterTooSmall("Ψ targets prime words with largest letter at least 2")
    if ell == 2:
        if word:
            raise LetterMismatch("Only the empty word maps back to 12")
        return (1, 2)
    if not word or max(word) != ell - 2:
        raise LetterMismatch(f"Largest letter must be {ell - 2}")
    factors = prime_decomposition(word)
    k = next(i for i, f in enumerate(factors) if max(f) == ell - 2)
    t = sum(factors[:k], ())
    s = factors[k]
    u = sum(factors[k + 1:], ())
    return s + t + (ell - 1,) + u + (ell,)


def richardson_extensions(word, shape):
    """Lazily yield the Richardson words of the given shape whose crop is `word`"""
    word = tuple(word)
    _require_richardson(word)
    shape = Partition(tuple(shape))
    if shape.length == 0:
        if not word:
            yield ()
        return
    if StandardTableau(word).shape.parts != shape.parts[1:]:
        return
    template = []
    for letter in word:
        if letter == 1:
            template.extend((1, 2))
        else:
            template.append(letter + 1)
    extra = shape[0] - (shape[1] if shape.length > 1 else 0)
    gaps = [g for g in range(len(template) + 1) if g == len(template) or template[g] != 2]
    for chosen in combinations_with_replacement(gaps, extra):
        out = []
        picks = list(chosen)
        for g in range(len(template) + 1):
            while picks and picks[0] == g:
                out.append(1)
                picks.pop(0)
            if g < len(template):
                out.append(template[g])
        yield tuple(out)


def richardson_words(shape):
    """All Richardson lattice words of the shape, built by crop recursion"""
    shape = Partition(tuple(shape))
    if shape.length == 0:
        return [()]
    inner = Partition(shape.parts[1:])
    words = [
        ext
        for smaller in richardson_words(inner)
        for ext in richardson_extensions(smaller, shape)
    ]
    return sorted(words)


def richardson_words_bounded(size, max_letter):
    """Richardson words of the given size on the alphabet [max_letter]"""
    words = []
    for shape in partitions_of(size):
        if shape.length <= max_letter:
            words.extend(richardson_words(shape))
    return sorted(words)


def prime_words(size, largest=None):
    """Prime Richardson words of a size, from P_ℓ = P_{ℓ-1} ∘ R_{≤ℓ-2} ∘ {ℓ}"""
    if largest is None:
        return sorted(w for ell in range(1, size + 1) for w in prime_words(size, ell))
    if largest == 1:
        return [(1,)] if size == 1 else []
    if largest == 2:
        return [(1, 2)] if size == 2 else []
    words = []
    for head_size in range(largest - 1, size):
        for head in prime_words(head_size, largest - 1):
            for tail in richardson_words_bounded(size - 1 - head_size, largest - 2):
                words.append(head + tail + (largest,))
    return sorted(words)


def is_prime_by_factoring(word):
    """Oracle: no split into two nonempty lattice words"""
    word = tuple(word)
    return bool(word) and not any(
        lattice_violation(word[:k]) is None and lattice_violation(word[k:]) is None
        for k in range(1, len(word))
    )


def characterizations(sigma):
    """Verdict of every Richardson characterization, in a fixed order"""
    from app.services import evacuation_service, springer_service

    return {
        'definition': is_richardson_def(sigma),
        'strong': is_richardson_strong(sigma),
        'word': is_richardson_word(sigma.word),
        'crop': is_richardson_crop(sigma),
        'lslides': evacuation_service.all_slides_L(sigma),
        'evacuation': is_richardson_def(evacuation_service.evacuate(sigma).result),
        'gap': springer_service.is_richardson_gap(sigma),
        'bruhat': springer_service.is_richardson_bruhat(sigma),
    }
