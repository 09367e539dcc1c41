"""
Weyl tableau labels for the shapes [1], [2], [11] and [21].

Text forms: rows joined by '/', letters either digits (``12/3``) or the
generic letters i, j, k, l (``ij/k``) that stand for 1, 2, 3, 4.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from apps.core.exceptions import TableauError

SHAPES = {
    '1': (1,),
    '2': (2,),
    '11': (1, 1),
    '21': (2, 1),
}

GENERIC_LETTERS = 'ijkl'


def shape_size(shape):
    return sum(_rows(shape))


def _rows(shape):
    if shape not in SHAPES:
        raise TableauError(f"Unsupported shape [{shape}].")
    return SHAPES[shape]


# [21] pairs close under R only once all three filling classes exist.
MIN_ALPHABET = {'1': 1, '2': 1, '11': 2, '21': 3}


def min_alphabet(shape):
    """Smallest alphabet for which R closes on the coupled pair basis."""
    _rows(shape)
    return MIN_ALPHABET[shape]


@dataclass(frozen=True, order=True)
class TableauLabel:
    shape: str
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        lengths = tuple(len(row) for row in self.rows)
        if lengths != _rows(self.shape):
            raise TableauError(f"Rows {self.rows} do not fill shape [{self.shape}].")
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise TableauError(f"Row {row} is not weakly increasing.")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise TableauError(f"Columns of {self.rows} are not strictly increasing.")
        if any(a < 1 for a in self.letters):
            raise TableauError('Letters start at 1.')

    @classmethod
    def parse(cls, text, shape=None):
        rows = tuple(tuple(_letter(ch) for ch in part.strip()) for part in text.split('/'))
        if shape is None:
            shape = ''.join(str(len(row)) for row in rows)
        return cls(shape, rows)

    @property
    def letters(self):
        return tuple(itertools.chain.from_iterable(self.rows))

    @property
    def content(self):
        return tuple(sorted(self.letters))

    @property
    def size(self):
        return len(self.letters)

    def fits(self, n):
        return max(self.letters) <= n

    @property
    def coupling_class(self):
        """Index p of the coupling operator B^p for a [21] filling."""
        if self.shape != '21':
            raise TableauError(f"Shape [{self.shape}] has no B coupling class.")
        (x, y), (z,) = self.rows
        if x < y == z:
            return 0
        if x == y:
            return 1
        if z < y:
            return 2
        return 3

    def __str__(self):
        return '/'.join(''.join(str(a) for a in row) for row in self.rows)

    def symbolic(self):
        if max(self.letters) > len(GENERIC_LETTERS):
            return str(self)
        return '/'.join(''.join(GENERIC_LETTERS[a - 1] for a in row) for row in self.rows)


def _letter(ch):
    if ch in GENERIC_LETTERS:
        return GENERIC_LETTERS.index(ch) + 1
    if ch.isdigit() and ch != '0':
        return int(ch)
    raise TableauError(f"Bad tableau letter {ch!r}.")


def tableaux(shape, n):
    """All Weyl tableaux of the shape over letters 1..n, sorted."""
    rows = _rows(shape)
    found = []
    for letters in itertools.product(range(1, n + 1), repeat=sum(rows)):
        split, start = [], 0
        for length in rows:
            split.append(tuple(letters[start:start + length]))
            start += length
        try:
            found.append(TableauLabel(shape, tuple(split)))
        except TableauError:
            continue
    return sorted(found)
