"""
Braid words, formal sums of words, and the recursive R word.
"""

from dataclasses import dataclass
from typing import Tuple

from apps.core.exceptions import IndexRangeError, RMatrixError
from apps.scalar.scalar import ONE
from apps.tensor.state import Space, State

from .action import EXACT


@dataclass(frozen=True)
class BraidWord:
    """Generator product; the rightmost factor applies first."""
    gens: Tuple[Tuple[int, bool], ...] = ()

    def __post_init__(self):
        for index, _ in self.gens:
            if index < 1:
                raise IndexRangeError(f"Generator index {index} must be positive.")

    @classmethod
    def of(cls, *indices):
        """Positive word g_{i1} g_{i2} ..."""
        return cls(tuple((i, False) for i in indices))

    @classmethod
    def parse(cls, text, **named):
        """
        Word from text like ``'2 R 2'`` or ``'1 -3'``; names expand to the
        given words, ``-i`` is an inverse generator.
        """
        gens = []
        for token in text.split():
            if token in named:
                gens.extend(named[token].gens)
            elif token.startswith('-'):
                gens.append((int(token[1:]), True))
            else:
                gens.append((int(token), False))
        return cls(tuple(gens))

    def __mul__(self, other):
        return BraidWord(self.gens + other.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def indices(self):
        return tuple(i for i, _ in self.gens)

    @property
    def max_index(self):
        return max(self.indices, default=0)

    def inverse(self):
        return BraidWord(tuple((i, not inv) for i, inv in reversed(self.gens)))

    def shifted(self, offset):
        return BraidWord(tuple((i + offset, inv) for i, inv in self.gens))

    def __str__(self):
        if not self.gens:
            return '1'
        return ' '.join(f"g{i}^-1" if inv else f"g{i}" for i, inv in self.gens)


class WordSum:
    """Hecke algebra element as a list of (Scalar, BraidWord) terms."""

    def __init__(self, terms=()):
        self.terms = tuple((c, w) for c, w in terms if c)

    @classmethod
    def of(cls, word, coeff=ONE):
        return cls([(coeff, word)])

    def __add__(self, other):
        return WordSum(self.terms + other.terms)

    def scaled(self, c):
        return WordSum((c * coeff, w) for coeff, w in self.terms)

    def shifted(self, offset):
        return WordSum((c, w.shifted(offset)) for c, w in self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def max_index(self):
        return max((w.max_index for _, w in self.terms), default=0)

    def __str__(self):
        return ' + '.join(f"({c})*[{w}]" for c, w in self.terms) or '0'


def r_word(f):
    """R_1 = g1; R_f = g_f..g_{2f-2} R_{f-1} g_{2f-1} g_{2f-2}..g_f."""
    if f < 1:
        raise RMatrixError(f"r_word needs f >= 1, got {f}.")
    word = BraidWord.of(1)
    for k in range(2, f + 1):
        prefix = BraidWord.of(*range(k, 2 * k - 1))
        suffix = BraidWord.of(*range(2 * k - 1, k - 1, -1))
        word = prefix * word * suffix
    return word


def lift_word(target, source):
    """
    Minimal positive word taking |source> to |target> by ascending swaps,
    lexicographically smallest among reduced words.

    The first letter of the word is the last swap applied, so it is read
    off as the leftmost descent of ``target``.
    """
    if sorted(target) != sorted(source):
        raise RMatrixError(f"{tuple(target)} is not a rearrangement of {tuple(source)}.")
    current = list(target)
    source = list(source)
    indices = []
    while current != source:
        for pos in range(len(current) - 1):
            if current[pos] > current[pos + 1]:
                break
        else:
            raise RMatrixError(f"{tuple(source)} is not reachable by ascending swaps.")
        current[pos], current[pos + 1] = current[pos + 1], current[pos]
        indices.append(pos + 1)
    return BraidWord.of(*indices)


def apply_word(w, v, action=EXACT):
    for index, inverse in reversed(w.gens):
        v = action.apply_g(index, v, inverse)
    return v


def apply_word_sum(ws, v, action=EXACT):
    result = v.zero(v.space, v.exact)
    for coeff, word in ws:
        result = result.add_scaled(action.coefficient(coeff), apply_word(word, v, action))
    return result


def standard_expansion(word, sites):
    """
    Expand a word in the positive-word basis through its action on the
    distinct-letter ket |1, 2, ..., sites>, where the action is regular.
    """
    space = Space.a_series(sites, sites)
    source = tuple(range(1, sites + 1))
    image = apply_word(word, State.basis(space, source))
    return WordSum(
        (coeff, lift_word(ket, source))
        for ket, coeff in sorted(image.items())
    )

