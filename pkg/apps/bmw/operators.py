"""
Contraction operator e1 and braid generator g1 on two-site kets.

Two versions of g1 are built. ``build_g1_printed`` transcribes the printed
rules literally, including the |-m,m> and |0,0> columns with their
coefficient formulas. ``build_g1_relations`` keeps the rules for
non-opposite kets and |m,-m> (m > 0) and derives the rest:

    g|-m,m> = r|m,-m> + t|-m,m> - t e|m,-m>         (quadratic relation)
    g|0,0>  = r^-1 u - sum_{k != 0} (-)^k w_k g|k,-k>   (g u = r^-1 u)

with t = q - q^-1 and u = sum_k (-)^k w_k |k,-k> spanning the image of e.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from apps.core.exceptions import SeriesError, SpaceMismatchError
from apps.scalar.scalar import ONE, Q, QINV, T, ZERO, Scalar, eval_float
from apps.tensor.state import State

from .series import SeriesParams, parity

logger = logging.getLogger(__name__)

Ket = Tuple[int, int]

# (q - q^-1)/(q - 1) reduces to 1 + q^-1
QFRAC = ONE + QINV


def _qp(exponent):
    return Scalar.q_power(exponent)


def _add(column, ket, value):
    total = column.get(ket, ZERO) + value
    if total:
        column[ket] = total
    else:
        column.pop(ket, None)


@dataclass
class KetOperator:
    """Sparse exact matrix on the two-site kets of a series, stored by column."""
    params: SeriesParams
    name: str
    columns: Dict[Ket, Dict[Ket, Scalar]]

    @property
    def space(self):
        return self.params.space(2)

    def kets(self):
        return list(self.space.kets())

    def column(self, ket):
        return dict(self.columns.get(tuple(ket), {}))

    def entry(self, row, col):
        return self.columns.get(tuple(col), {}).get(tuple(row), ZERO)

    def items(self):
        for col in self.kets():
            for row, value in sorted(self.columns.get(col, {}).items()):
                yield row, col, value

    def __len__(self):
        return sum(len(column) for column in self.columns.values())

    def __call__(self, v):
        if v.space != self.space:
            raise SpaceMismatchError(f"{self.name} acts on {self.space}, not {v.space}.")
        if not v.exact:
            raise SpaceMismatchError(f"{self.name} acts on exact states only.")
        out = {}
        for ket, c in v.items():
            for row, value in self.columns.get(ket, {}).items():
                _add(out, row, c * value)
        return State(self.space, out, check=False)

    def to_dense(self, q=None):
        """Dense matrix in ``kets()`` order; object dtype of Scalars when q is None."""
        kets = self.kets()
        index = {ket: pos for pos, ket in enumerate(kets)}
        if q is None:
            dense = np.full((len(kets), len(kets)), ZERO, dtype=object)
        else:
            dense = np.zeros((len(kets), len(kets)))
        for row, col, value in self.items():
            dense[index[row], index[col]] = value if q is None else eval_float(value, q)
        return dense


def contraction_image(p):
    """u = sum_k (-)^k w_k |k,-k>."""
    return {(k, -k): p.weight(k) * parity(k) for k in p.index_set}


def build_e1(p):
    """e1|m,-m> = (-)^m u; zero on every other ket."""
    u = contraction_image(p)
    columns = {}
    for m in p.index_set:
        sign = parity(m)
        columns[(m, -m)] = {ket: value * sign for ket, value in u.items()}
    return KetOperator(p, 'e1', columns)


def _hecke_column(a, b):
    """Rules for a != -b: eigenvalue q, plain swap when a > b, mixing when a < b."""
    if a == b:
        return {(a, b): Q}
    if a > b:
        return {(b, a): ONE}
    return {(a, b): T, (b, a): ONE}


def _common_columns(p):
    columns = {}
    for a, b in p.space(2).kets():
        if a != -b:
            columns[(a, b)] = _hecke_column(a, b)
        elif a > 0:
            columns[(a, b)] = {(b, a): p.rinv}
    return columns


def a_coefficient(p, m):
    rinv = p.rinv
    return (_qp(-m) * rinv - _qp(-m + 1) + _qp(-m - 1) + _qp(1 - 2 * m) - _qp(-2 * m - 1)
            - _qp(m) * rinv
            + QFRAC * (_qp(-m) - _qp(-p.n - m) - _qp(-2 * m + 1) + _qp(-2 * m)))


def b_coefficient(p, m):
    r, rinv = p.r, p.rinv
    return (rinv * _qp(m) - QINV + Q - r * _qp(-m)
            + QFRAC * (_qp(m) - _qp(-p.n + m) - Q + ONE))


def c_coefficient(p):
    # (q - q^{-n+1} - q^-1 + q^{-n-1}) = (q - q^-1)(1 - q^-n)
    return p.rinv + QFRAC * (ONE - _qp(-p.n))


def printed_opposite_column(p, m):
    """Printed g|-m,m> for m > 0."""
    column = {
        (m, -m): _qp(m - 1) - _qp(m + 1) + p.r,
        (-m, m): T - _qp(1 - m) + _qp(-m - 1),
    }
    for k in p.index_set:
        if k not in (m, -m):
            column[(k, -k)] = -(T * _qp(k)) * parity(m + k)
    return {ket: value for ket, value in column.items() if value}


def printed_zero_column(p):
    """Printed g|0,0>, B series only."""
    if not p.has_zero:
        raise SeriesError(f"{p.label} has no |0,0> ket.")
    column = {(0, 0): c_coefficient(p)}
    for m in range(1, p.n + 1):
        column[(-m, m)] = a_coefficient(p, m) * parity(m)
        column[(m, -m)] = b_coefficient(p, m) * parity(m)
    return {ket: value for ket, value in column.items() if value}


def build_g1_printed(p):
    columns = _common_columns(p)
    for m in range(1, p.n + 1):
        columns[(-m, m)] = printed_opposite_column(p, m)
    if p.has_zero:
        columns[(0, 0)] = printed_zero_column(p)
    return KetOperator(p, 'g1 (printed)', columns)


def relation_opposite_column(p, m):
    """g|-m,m> from g^2 = t(g - r^-1 e) + 1 applied to |m,-m>."""
    column = {(m, -m): p.r}
    _add(column, (-m, m), T)
    sign = parity(m)
    for ket, value in contraction_image(p).items():
        _add(column, ket, -(T * value) * sign)
    return column


def relation_zero_column(p, known):
    """g|0,0> from g u = r^-1 u, given the |k,-k> columns for k != 0."""
    if not p.has_zero:
        raise SeriesError(f"{p.label} has no |0,0> ket.")
    w0 = p.weight(0)
    if w0 != ONE:
        raise SeriesError(f"Weight of |0,0> must be 1, got {w0}.")
    column = {}
    for ket, value in contraction_image(p).items():
        _add(column, ket, value * p.rinv)
    for k in p.index_set:
        if k == 0:
            continue
        scale = p.weight(k) * parity(k)
        for ket, value in known[(k, -k)].items():
            _add(column, ket, -(scale * value))
    return column


def build_g1_relations(p):
    columns = _common_columns(p)
    for m in range(1, p.n + 1):
        columns[(-m, m)] = relation_opposite_column(p, m)
    if p.has_zero:
        columns[(0, 0)] = relation_zero_column(p, columns)
    logger.debug("%s g1 from relations: %d entries", p.label, sum(map(len, columns.values())))
    return KetOperator(p, 'g1 (relations)', columns)
