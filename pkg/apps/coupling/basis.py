"""
Coupled basis vectors of [l] x [l] built constructively.

A coupled ket |L, R> is the coupling operator of L at site 1 and of R at
site f+1 applied to the positive lift of the sorted content onto the two
sorted blocks, with each block scaled to unit self-pairing.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from apps.core.exceptions import BasisIncompleteError, TableauError
from apps.hecke.action import EXACT, HeckeAction
from apps.hecke.words import apply_word, apply_word_sum, lift_word
from apps.scalar.scalar import ONE, ZERO
from apps.tensor.state import Space, State, inner

from .operators import block_word_sum
from .tableaux import TableauLabel, tableaux

logger = logging.getLogger(__name__)

GRAM_TOL = 1e-9


@dataclass
class CoupledKet:
    left: TableauLabel
    right: TableauLabel
    expansion: State

    @property
    def shape(self):
        return self.left.shape

    @property
    def label(self):
        return (self.left, self.right)

    @property
    def content(self):
        return tuple(sorted(self.left.letters + self.right.letters))

    def __str__(self):
        return f"{self.left},{self.right}"

    def symbolic(self):
        return f"{self.left.symbolic()},{self.right.symbolic()}"


def positive_lift(target, sorted_letters):
    """Reduced positive word Q with Q|sorted> = |target>."""
    if list(sorted_letters) != sorted(sorted_letters):
        raise TableauError(f"{tuple(sorted_letters)} is not weakly increasing.")
    return lift_word(tuple(target), tuple(sorted_letters))


@lru_cache(maxsize=None)
def _block_factor(label, q):
    action = EXACT if q is None else HeckeAction(q)
    letters = label.content
    space = Space.a_series(max(letters), len(letters))
    image = apply_word_sum(block_word_sum(label), State.basis(space, letters, exact=action.exact), action)
    norm = inner(image, image)
    if not norm:
        raise TableauError(f"Coupling of {label} vanishes on |{letters}>.")
    if action.exact:
        return ONE / norm.sqrt()
    return 1.0 / math.sqrt(norm)


def block_factor(label, action=EXACT):
    """Reciprocal norm of the block image of the label's sorted letters."""
    return _block_factor(label, action.q)


def coupled_ket(left, right, n, action=EXACT):
    if left.shape != right.shape:
        raise TableauError(f"Labels {left} and {right} have different shapes.")
    if not (left.fits(n) and right.fits(n)):
        raise TableauError(f"{left},{right} does not fit in {n} letters.")
    f = left.size
    space = Space.a_series(n, 2 * f)
    blocks = left.content + right.content
    content = tuple(sorted(blocks))
    v = apply_word(positive_lift(blocks, content), State.basis(space, content, exact=action.exact), action)
    v = apply_word_sum(block_word_sum(right).shifted(f), v, action)
    v = apply_word_sum(block_word_sum(left), v, action)
    return CoupledKet(left, right, v * (block_factor(left, action) * block_factor(right, action)))


def content_classes(shape, n):
    """Sorted letter multisets reachable by a pair of tableaux of the shape."""
    labels = tableaux(shape, n)
    return sorted({tuple(sorted(a.letters + b.letters)) for a in labels for b in labels})


def check_orthonormal(kets, exact=True):
    for a, x in enumerate(kets):
        for b in range(a, len(kets)):
            value = inner(x.expansion, kets[b].expansion)
            expected = 1 if a == b else 0
            if exact:
                good = value == (ONE if expected else ZERO)
            else:
                good = abs(value - expected) < GRAM_TOL
            if not good:
                raise BasisIncompleteError(
                    f"Coupled kets {x} and {kets[b]} pair to {value}, expected {expected}."
                )


def coupled_pair_basis(shape, content, n, action=EXACT, check=True):
    content = tuple(sorted(content))
    labels = tableaux(shape, n)
    kets = [
        coupled_ket(left, right, n, action)
        for left in labels
        for right in labels
        if tuple(sorted(left.letters + right.letters)) == content
    ]
    if not kets:
        raise TableauError(f"Content {content} does not split into two [{shape}] fillings.")
    if check:
        check_orthonormal(kets, action.exact)
    logger.debug("[%s] content %s: %d coupled kets", shape, content, len(kets))
    return kets
