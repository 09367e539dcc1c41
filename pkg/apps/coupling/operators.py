"""
Coupling operators as Hecke algebra elements.

Each is a WordSum on generators g1 (and g2) that is shifted to act at a
given site offset:

    A      = [2]^-1/2 (q^-1/2 + q^1/2 g1)          [2] coupling
    asym   = [2]^-1/2 (q^1/2 - q^-1/2 g1)          [11] coupling
    B0..B3 = three-site couplings onto [21]
"""

from apps.core.exceptions import TableauError
from apps.hecke.action import EXACT
from apps.hecke.words import BraidWord, WordSum, apply_word_sum
from apps.scalar.scalar import ONE, Q, QINV, Scalar, qnum, sqrt_monomial

S = Scalar.monomial(1, 1)
SINV = Scalar.monomial(1, -1)
INV_SQRT2 = sqrt_monomial(0, -1)
INV_QNUM2 = ONE.div_qnum(2)
# sqrt(q / [3]!)
SQRT_Q_OVER_FACT3 = sqrt_monomial(1, -1, -1)
# sqrt(1 / [3])
INV_SQRT3 = sqrt_monomial(0, 0, -1)

E = BraidWord()
G1, G2 = BraidWord.of(1), BraidWord.of(2)

SYM2 = WordSum([
    (INV_SQRT2 * SINV, E),
    (INV_SQRT2 * S, G1),
])

ASYM2 = WordSum([
    (INV_SQRT2 * S, E),
    (-INV_SQRT2 * SINV, G1),
])

B_OPERATORS = (
    WordSum([
        (SQRT_Q_OVER_FACT3, E),
        (SQRT_Q_OVER_FACT3 * Q, G1),
        (-SQRT_Q_OVER_FACT3 * QINV * qnum(2), BraidWord.of(2, 1)),
    ]),
    WordSum([
        (SQRT_Q_OVER_FACT3 * qnum(2), E),
        (-SQRT_Q_OVER_FACT3 * QINV * QINV, G2),
        (-SQRT_Q_OVER_FACT3 * QINV, BraidWord.of(1, 2)),
    ]),
    WordSum([
        (INV_QNUM2, G2),
        (INV_QNUM2 * Q, BraidWord.of(1, 2)),
        (-INV_QNUM2 * QINV, BraidWord.of(2, 1)),
        (-INV_QNUM2, BraidWord.of(2, 1, 2)),
    ]),
    WordSum([
        (INV_SQRT3, E),
        (INV_SQRT3 * Q, G1),
        (-INV_SQRT3 * INV_QNUM2 * QINV * QINV, G2),
        (-INV_SQRT3 * INV_QNUM2 * QINV, BraidWord.of(1, 2)),
        (-INV_SQRT3 * INV_QNUM2 * QINV, BraidWord.of(2, 1)),
        (-INV_SQRT3 * INV_QNUM2, BraidWord.of(1, 2, 1)),
    ]),
)


def _operator(ws, offset, action):
    shifted = ws.shifted(offset - 1)

    def coupling(v):
        return apply_word_sum(shifted, v, action)
    coupling.word_sum = shifted
    return coupling


def sym2_op(offset, action=EXACT):
    return _operator(SYM2, offset, action)


def asym2_op(offset, action=EXACT):
    return _operator(ASYM2, offset, action)


def b_op(p, offset, action=EXACT):
    if p not in range(len(B_OPERATORS)):
        raise TableauError(f"No three-site coupling operator B^{p}.")
    return _operator(B_OPERATORS[p], offset, action)


def block_word_sum(label):
    """Coupling element for one tableau block, acting from site 1."""
    if label.shape == '1':
        return WordSum.of(E)
    if label.shape == '2':
        return SYM2
    if label.shape == '11':
        return ASYM2
    return B_OPERATORS[label.coupling_class]
