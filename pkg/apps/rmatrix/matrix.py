"""
R matrices in the coupled pair basis.

The matrix of R on [l] x [l] is block diagonal over content classes (the
sorted letter multiset of a pair of tableaux). Entries are extracted with
the bilinear pairing against the orthonormal coupled kets, and every
column is checked to be reconstructed exactly from them.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from apps.core.exceptions import BasisIncompleteError, TableauError
from apps.core.timing import timed
from apps.coupling.basis import content_classes, coupled_pair_basis
from apps.coupling.tableaux import TableauLabel, min_alphabet, shape_size, tableaux
from apps.hecke.action import EXACT, HeckeAction
from apps.hecke.words import apply_word, r_word
from apps.scalar.scalar import ZERO, eval_float
from apps.tensor.state import inner

logger = logging.getLogger(__name__)

# Float reconstruction residual accepted by the float pipeline.
RESIDUAL_TOL = 1e-9

PairLabel = Tuple[TableauLabel, TableauLabel]


def pair_text(label, symbolic=False):
    left, right = label
    if symbolic:
        return f"{left.symbolic()},{right.symbolic()}"
    return f"{left},{right}"


def parse_pair(text, shape):
    """'ij,kl' or '12,34' -> (TableauLabel, TableauLabel) of the shape."""
    parts = text.split(',')
    if len(parts) != 2:
        raise TableauError(f"Pair label {text!r} needs exactly two tableaux.")
    return tuple(TableauLabel.parse(part.strip(), shape) for part in parts)


@dataclass
class MatrixBlock:
    """Entries of R between the coupled kets of one content class."""
    content: Tuple[int, ...]
    labels: List[PairLabel]
    entries: Dict[Tuple[PairLabel, PairLabel], object] = field(default_factory=dict)
    residual: float = 0.0

    def entry(self, row, col, zero=None):
        return self.entries.get((row, col), zero)


@dataclass
class LabeledMatrix:
    shape: str
    n: int
    blocks: List[MatrixBlock]
    q: Optional[float] = None

    @property
    def exact(self):
        return self.q is None

    @property
    def zero(self):
        return ZERO if self.exact else 0.0

    def block_of(self, label):
        content = tuple(sorted(label[0].letters + label[1].letters))
        for block in self.blocks:
            if block.content == content:
                return block
        return None

    def entry(self, row, col):
        """M[row, col]; zero between content classes or unknown labels."""
        block = self.block_of(col)
        if block is None:
            return self.zero
        return block.entry(row, col, self.zero)

    def column(self, col):
        """Non-zero entries of one column as {row label: value}."""
        block = self.block_of(col)
        if block is None:
            return {}
        return {row: value for (row, c), value in block.entries.items() if c == col}

    def labels(self):
        return sorted(label for block in self.blocks for label in block.labels)

    def items(self):
        for block in self.blocks:
            for (row, col), value in sorted(block.entries.items()):
                yield row, col, value

    def __len__(self):
        return sum(len(block.entries) for block in self.blocks)

    def evaluate(self, q):
        """Float copy of an exact matrix at q."""
        if not self.exact:
            return self
        blocks = [
            MatrixBlock(
                block.content,
                list(block.labels),
                {key: eval_float(value, q) for key, value in block.entries.items()},
            )
            for block in self.blocks
        ]
        return LabeledMatrix(self.shape, self.n, blocks, q=q)

    def single_labels(self):
        """Tableaux spanning one factor V of V x V."""
        return tableaux(self.shape, self.n)

    def to_numpy(self, q=None):
        """
        Dense float matrix on V x V, pair (a, b) at index a * d + b with a,
        b the positions of the tableaux in ``single_labels()``.
        """
        matrix = self if not self.exact else self.evaluate(q)
        singles = self.single_labels()
        position = {label: index for index, label in enumerate(singles)}
        d = len(singles)
        dense = np.zeros((d * d, d * d))
        for (a, b), (c, e), value in matrix.items():
            dense[position[a] * d + position[b], position[c] * d + position[e]] = value
        return dense


def _block(content, kets, word, action):
    labels = [ket.label for ket in kets]
    block = MatrixBlock(content, labels)
    for column in kets:
        image = apply_word(word, column.expansion, action)
        remainder = image
        for row in kets:
            value = inner(row.expansion, image)
            if value:
                block.entries[(row.label, column.label)] = value
                remainder = remainder.add_scaled(-value, row.expansion)
        if action.exact:
            if not remainder.is_zero():
                raise BasisIncompleteError(
                    f"R|{column}> leaves {remainder!r} outside the coupled basis."
                )
        else:
            residual = remainder.max_abs()
            block.residual = max(block.residual, residual)
            if residual > RESIDUAL_TOL:
                raise BasisIncompleteError(
                    f"R|{column}> leaves a residual of {residual:.3e} outside the coupled basis."
                )
    return block


@timed
def compute_rmatrix(shape, n, q=None):
    """
    Matrix of R = r_word(f) on the coupled pair basis of [shape] x [shape]
    over letters 1..n; exact when ``q`` is None, float otherwise.
    """
    needed = min_alphabet(shape)
    if n < needed:
        raise TableauError(f"[{shape}] x [{shape}] needs at least {needed} letters, got n={n}.")
    action = EXACT if q is None else HeckeAction(q)
    word = r_word(shape_size(shape))
    blocks = []
    for content in content_classes(shape, n):
        kets = coupled_pair_basis(shape, content, n, action)
        blocks.append(_block(content, kets, word, action))
    matrix = LabeledMatrix(shape, n, blocks, q=q)
    logger.info("[%s] x [%s], n=%d: %d classes, %d entries",
                shape, shape, n, len(blocks), len(matrix))
    return matrix
