"""
Structural checks of computed R matrices.

- ybe_check: braid-form Yang-Baxter equation on V x V x V
- intertwiner_check: R exchanges the coupling operators of its two blocks
- n_independence_check: entries depend only on the relative order of letters
"""

import itertools
import logging

import numpy as np

from apps.core.exceptions import RMatrixError, TableauError
from apps.core.reports import Report
from apps.core.timing import timed
from apps.coupling.operators import B_OPERATORS, asym2_op, sym2_op
from apps.coupling.tableaux import TableauLabel
from apps.hecke.dense import DenseHecke
from apps.hecke.identities import dense_report
from apps.hecke.words import apply_word, r_word
from apps.scalar.scalar import ONE, ZERO
from apps.tensor.serializers import StateSerializer
from apps.tensor.state import Space, State

from .matrix import compute_rmatrix, pair_text

logger = logging.getLogger(__name__)

MODES = ('exact', 'float')

# Alphabet of the intertwiner checks.
INTERTWINER_ALPHABET = 3


# -- Yang-Baxter -------------------------------------------------------------

def _sparse_columns(matrix):
    position = {label: index for index, label in enumerate(matrix.single_labels())}
    columns = {}
    for (ra, rb), (ca, cb), value in matrix.items():
        columns.setdefault((position[ca], position[cb]), []).append(
            ((position[ra], position[rb]), value)
        )
    return columns


def _apply_pair(columns, vector, slot):
    """R acting on factors slot, slot+1 of a sparse V x V x V vector."""
    out = {}
    for triple, c in vector.items():
        for pair, value in columns.get(triple[slot:slot + 2], ()):
            target = triple[:slot] + pair + triple[slot + 2:]
            out[target] = out.get(target, ZERO) + c * value
    return {key: value for key, value in out.items() if value}


def _exact_ybe(matrix, report):
    columns = _sparse_columns(matrix)
    d = len(matrix.single_labels())
    for triple in itertools.product(range(d), repeat=3):
        v = {triple: ONE}
        lhs = _apply_pair(columns, _apply_pair(columns, _apply_pair(columns, v, 0), 1), 0)
        rhs = _apply_pair(columns, _apply_pair(columns, _apply_pair(columns, v, 1), 0), 1)
        report.record_case()
        bad = [key for key in set(lhs) | set(rhs) if lhs.get(key, ZERO) != rhs.get(key, ZERO)]
        if bad:
            report.record_failure(triple=list(triple), differing=len(bad))


def _float_ybe(matrix, report):
    r = matrix.to_numpy()
    eye = np.eye(len(matrix.single_labels()))
    r12 = np.kron(r, eye)
    r23 = np.kron(eye, r)
    residuals = np.abs(r12 @ r23 @ r12 - r23 @ r12 @ r23).max(axis=0)
    for column, residual in enumerate(residuals):
        report.record_case(float(residual))
        if residual > report.tol:
            report.record_failure(column=column, residual=float(residual))


@timed
def ybe_check(shape, n, mode='exact', q=None, tol=None):
    """(R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R) on V x V x V."""
    if mode not in MODES:
        raise RMatrixError(f"Unknown mode {mode!r}; expected one of {MODES}.")
    if mode == 'exact':
        report = Report(relation='ybe', space=f"[{shape}] n={n}, exact")
        _exact_ybe(compute_rmatrix(shape, n), report)
    else:
        report = Report(relation='ybe', space=f"[{shape}] n={n}, q={q}", tol=tol)
        _float_ybe(compute_rmatrix(shape, n, q=q), report)
    logger.debug(report.summary())
    return report


# -- intertwiners ------------------------------------------------------------

def _operator_identity(relation, lhs, rhs, space):
    report = Report(relation=relation, space=str(space))
    for ket in space.kets():
        v = State.basis(space, ket)
        left, right = lhs(v), rhs(v)
        report.record_case()
        if not (left - right).is_zero():
            report.record_failure(
                ket=list(ket),
                lhs=StateSerializer(left).data,
                rhs=StateSerializer(right).data,
            )
    return report


def _two_site_intertwiners(coupling, name, n):
    space = Space.a_series(n, 4)
    word = r_word(2)
    a12, a34 = coupling(1), coupling(3)

    def r(v):
        return apply_word(word, v)

    return [
        _operator_identity(f"R {name}12 = {name}34 R",
                           lambda v: r(a12(v)), lambda v: a34(r(v)), space),
        _operator_identity(f"R {name}34 = {name}12 R",
                           lambda v: r(a34(v)), lambda v: a12(r(v)), space),
        _operator_identity(f"R {name}12 {name}34 = {name}12 {name}34 R",
                           lambda v: r(a12(a34(v))), lambda v: a12(a34(r(v))), space),
    ]


def _three_site_intertwiners(n, q, tol):
    space = Space.a_series(n, 6)
    dense = DenseHecke(space, q)
    label = f"n={n}, sites=6, q={q}"
    r = dense.word(r_word(3))
    b12 = [dense.word_sum(ws) for ws in B_OPERATORS]
    b45 = [dense.word_sum(ws.shifted(3)) for ws in B_OPERATORS]
    reports = []
    exchange_12 = Report(relation='R B12^p = B45^p R', space=label, tol=tol)
    exchange_45 = Report(relation='R B45^p = B12^p R', space=label, tol=tol)
    for p in range(len(B_OPERATORS)):
        exchange_12 = exchange_12.merge(
            dense_report(exchange_12.relation, dense, r @ b12[p], b45[p] @ r, tol, label))
        exchange_45 = exchange_45.merge(
            dense_report(exchange_45.relation, dense, r @ b45[p], b12[p] @ r, tol, label))
    reports.extend([exchange_12, exchange_45])
    pair = Report(relation='R B12^p B45^r = B45^p B12^r R', space=label, tol=tol)
    for p, s in itertools.product(range(len(B_OPERATORS)), repeat=2):
        pair = pair.merge(dense_report(pair.relation, dense,
                                       r @ b12[p] @ b45[s], b45[p] @ b12[s] @ r, tol, label))
    reports.append(pair)
    return reports


@timed
def intertwiner_check(shape, n=INTERTWINER_ALPHABET, q=0.7, tol=1e-9):
    """
    R moves coupling operators from one block to the other.

    Exact on every 4-site ket for [2] and [11]; on dense float matrices over
    the 6-site space for the [21] operators.
    """
    if shape == '2':
        reports = _two_site_intertwiners(sym2_op, 'A', n)
    elif shape == '11':
        reports = _two_site_intertwiners(asym2_op, 'P', n)
    elif shape == '21':
        reports = _three_site_intertwiners(n, q, tol)
    else:
        raise TableauError(f"[{shape}] has no coupling operators to exchange.")
    for report in reports:
        logger.debug(report.summary())
    return reports


# -- n independence ----------------------------------------------------------

def _relabel(label, rank):
    return TableauLabel(label.shape, tuple(tuple(rank[a] for a in row) for row in label.rows))


def letter_pattern(row, col):
    """Row and column labels with letters replaced by their rank in the content."""
    letters = sorted(set(col[0].letters + col[1].letters))
    rank = {a: index + 1 for index, a in enumerate(letters)}
    return (
        tuple(_relabel(label, rank) for label in row),
        tuple(_relabel(label, rank) for label in col),
    )


@timed
def n_independence_check(shape, n1, n2):
    """Every letter pattern has one value across the alphabets n1 and n2."""
    if n1 >= n2:
        raise RMatrixError(f"Expected n1 < n2, got {n1} and {n2}.")
    classes = {}
    for n in (n1, n2):
        matrix = compute_rmatrix(shape, n)
        for block in matrix.blocks:
            for col in block.labels:
                for row in block.labels:
                    key = letter_pattern(row, col)
                    classes.setdefault(key, []).append((n, row, col, block.entry(row, col, ZERO)))
    report = Report(relation='n-independence', space=f"[{shape}] n={n1},{n2}")
    for (row_pattern, col_pattern), found in sorted(classes.items()):
        report.record_case()
        n_a, row_a, col_a, first = found[0]
        for n_b, row_b, col_b, value in found[1:]:
            if value != first:
                report.record_failure(
                    pattern=f"{pair_text(row_pattern)} <- {pair_text(col_pattern)}",
                    first={'n': n_a, 'row': pair_text(row_a), 'col': pair_text(col_a), 'value': str(first)},
                    second={'n': n_b, 'row': pair_text(row_b), 'col': pair_text(col_b), 'value': str(value)},
                )
                break
    report.details['classes'] = len(classes)
    logger.debug(report.summary())
    return report
