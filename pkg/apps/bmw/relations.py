"""
Relation suite for the e1/g1 realization of a series.

Two-site relations are compared column by column on dense matrices, with
Scalar entries in exact mode and floats otherwise. The braid relation acts
on three sites.

When the printed g1 violates a relation involving g, the report carries a
corrected column for every failing ket, taken from ``corrected_g1``, and
the residual of that operator. The quadratic forms tie x to r; when the
weight sum differs from 1 + (r - r^-1)/(q - q^-1) no g1 satisfies them
together with e g = r^-1 e, so the correction is measured against

    g^2 = t g + 1 + k e,    k = (r^-2 - t r^-1 - 1)/x

which reduces to the printed form at the standard x.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np
from django.conf import settings

from apps.core.exceptions import RMatrixError, ScalarError, SeriesError
from apps.core.reports import Report
from apps.core.timing import timed
from apps.scalar.scalar import ONE, Q, QINV, T, ZERO, Scalar, eval_float
from apps.tensor.operators import apply_on_sites, compose
from apps.tensor.serializers import StateSerializer
from apps.tensor.state import State

from .operators import (
    a_coefficient,
    b_coefficient,
    build_e1,
    build_g1_printed,
    build_g1_relations,
    c_coefficient,
)
from .series import SeriesParams, parity

logger = logging.getLogger(__name__)

MODES = ('exact', 'float')
SOURCES = ('printed', 'relations')

# Evaluation point of the corrected residuals in exact mode.
CORRECTION_Q = 0.8
CORRECTION_TOL = 1e-10

CUBIC = 'cubic (g - r^-1)(g - q)(g + q^-1) = 0'
E_FROM_G = 't(1 - e)g = g^2 - 1'
EG = 'e g = r^-1 e'
GE = 'g e = r^-1 e'
EE = 'e^2 = x e'
QUADRATIC = 'g^2 = t(g - r^-1 e) + 1'
BRAID = 'g1 g2 g1 = g2 g1 g2'

G_RELATIONS = (CUBIC, E_FROM_G, EG, GE, QUADRATIC)
# Relations that only hold at the standard x.
X_DEPENDENT = (E_FROM_G, QUADRATIC)
ADJUSTED_QUADRATIC = 'g^2 = t g + 1 + k e, k = (r^-2 - t r^-1 - 1)/x'


def default_source(p):
    return 'printed' if p.weights == 'literal' else 'relations'


def build_g1(p, source=None):
    source = source or default_source(p)
    if source not in SOURCES:
        raise RMatrixError(f"Unknown g1 source {source!r}; expected one of {SOURCES}.")
    return build_g1_printed(p) if source == 'printed' else build_g1_relations(p)


def _lower(value, q):
    return value if q is None else eval_float(value, q)


def _identity(size, q):
    if q is not None:
        return np.eye(size)
    eye = np.full((size, size), ZERO, dtype=object)
    for index in range(size):
        eye[index, index] = ONE
    return eye


def two_site_relations(p, g, e, q=None):
    """{relation: (lhs, rhs)} dense matrices; exact when q is None."""
    G, E = g.to_dense(q), e.to_dense(q)
    I = _identity(len(G), q)
    rinv, qc, qinv, t, x = (_lower(value, q) for value in (p.rinv, Q, QINV, T, p.x))
    GG = G @ G
    return {
        CUBIC: ((G - rinv * I) @ (G - qc * I) @ (G + qinv * I), I * _lower(ZERO, q)),
        E_FROM_G: (t * ((I - E) @ G), GG - I),
        EG: (E @ G, rinv * E),
        GE: (G @ E, rinv * E),
        EE: (E @ E, x * E),
        QUADRATIC: (GG, t * (G - rinv * E) + I),
    }


def _column_report(relation, kets, lhs, rhs, exact, tol, label):
    report = Report(relation=relation, space=label, tol=None if exact else tol)
    diff = lhs - rhs
    for index, ket in enumerate(kets):
        if exact:
            report.record_case()
            differing = sum(1 for value in diff[:, index] if value)
            if differing:
                report.record_failure(ket=list(ket), differing=differing)
        else:
            residual = float(np.abs(diff[:, index]).max())
            report.record_case(residual)
            if residual > tol:
                report.record_failure(ket=list(ket), residual=residual)
    return report


def _max_residual(lhs, rhs):
    return float(np.abs(lhs - rhs).max())


def _braid_report(p, g, q, tol, label):
    space = p.space(3)
    kets = list(space.kets())
    if q is None:
        g1, g2 = apply_on_sites(g, 1, 2), apply_on_sites(g, 2, 2)
        report = Report(relation=BRAID, space=label)
        for ket in kets:
            v = State.basis(space, ket)
            lhs, rhs = compose(g1, g2, g1)(v), compose(g2, g1, g2)(v)
            report.record_case()
            if not (lhs - rhs).is_zero():
                report.record_failure(ket=list(ket), differing=len(lhs - rhs))
        return report
    G = g.to_dense(q)
    eye = np.eye(len(G))
    g1, g2 = np.kron(G, eye), np.kron(eye, G)
    return _column_report(BRAID, kets, g1 @ g2 @ g1, g2 @ g1 @ g2, False, tol, label)


# -- corrections -------------------------------------------------------------

def corrected_g1(p, q=CORRECTION_Q):
    """
    Float g1 at q whose opposite-pair block satisfies v^T g = r^-1 v^T,
    g u = r^-1 u and the cubic relation for the weights of ``p``.

    With P = u v^T / x and y_k = (1 - P)|k,-k>, the block is r^-1 P + M,
    where M solves M u = 0, M y_m = r^-1 y_-m and M y_-m = t y_-m + r y_m
    (m > 0) in the least-squares sense. The system is square and regular
    for the B series; for C and D it is overdetermined and the fit is only
    approximate. Non-opposite columns and the |m,-m> columns are unchanged.
    """
    G = build_g1_printed(p).to_dense(q)
    kets = list(p.space(2).kets())
    index = {ket: pos for pos, ket in enumerate(kets)}
    block = [index[ket] for ket in p.opposite_pairs()]
    letters = p.index_set
    pos = {k: i for i, k in enumerate(letters)}
    u = np.array([eval_float(p.weight(k), q) * parity(k) for k in letters])
    v = np.array([float(parity(k)) for k in letters])
    P = np.outer(u, v) / (v @ u)
    Y = np.eye(len(letters)) - P
    r, t = eval_float(p.r, q), eval_float(T, q)
    sources, targets = [u], [np.zeros(len(letters))]
    for m in range(1, p.n + 1):
        y_plus, y_minus = Y[:, pos[m]], Y[:, pos[-m]]
        sources.extend((y_plus, y_minus))
        targets.extend((y_minus / r, t * y_minus + r * y_plus))
    # rows: M s = t_s  <=>  s^T M^T = t_s^T
    Mt, _, rank, _ = np.linalg.lstsq(np.array(sources), np.array(targets), rcond=None)
    logger.debug("%s correction at q=%s: rank %d of %d", p.label, q, rank, len(letters))
    G[np.ix_(block, block)] = P / r + Mt.T
    return G


def corrected_residuals(p, G, E, q):
    """Residual of every g relation for the float pair (G, E) at q."""
    rinv, qc, qinv, t, x = (eval_float(value, q) for value in (p.rinv, Q, QINV, T, p.x))
    I = np.eye(len(G))
    kappa = (rinv * rinv - t * rinv - 1.0) / x
    adjusted = _max_residual(G @ G, t * G + I + kappa * E)
    return {
        CUBIC: float(np.abs((G - rinv * I) @ (G - qc * I) @ (G + qinv * I)).max()),
        EG: _max_residual(E @ G, rinv * E),
        GE: _max_residual(G @ E, rinv * E),
        E_FROM_G: adjusted,
        QUADRATIC: adjusted,
    }


def _float_column(space, kets, G, ket):
    col = G[:, kets.index(tuple(ket))]
    return State(space, {
        row: float(value) for row, value in zip(kets, col) if abs(value) > CORRECTION_TOL
    }, exact=False)


def _attach_corrections(reports, p, q):
    """Corrected columns and residuals for the failing g relations."""
    q = q if q is not None else CORRECTION_Q
    G = corrected_g1(p, q)
    residuals = corrected_residuals(p, G, build_e1(p).to_dense(q), q)
    space = p.space(2)
    kets = list(space.kets())
    for report in reports:
        if report.relation not in G_RELATIONS or not report.failure_count:
            continue
        residual = residuals[report.relation]
        for failure in report.failures:
            failure['corrected'] = StateSerializer(_float_column(space, kets, G, failure['ket'])).data
        report.details.update(corrected_q=q, corrected_residual=residual)
        if report.relation in X_DEPENDENT:
            report.details['corrected_relation'] = ADJUSTED_QUADRATIC
        report.explained = residual <= CORRECTION_TOL


@timed
def verify_bmw(p, mode='exact', q=None, tol=None, source=None, braid=True):
    """
    Check the cubic relation, e from g, e g = r^-1 e, g e = r^-1 e,
    e^2 = x e, the quadratic relation and (optionally) the braid relation.

    ``source`` picks the printed or the relation-derived g1; the default
    follows the weights (printed for literal).
    """
    if mode not in MODES:
        raise RMatrixError(f"Unknown mode {mode!r}; expected one of {MODES}.")
    source = source or default_source(p)
    if mode == 'float':
        q = q if q is not None else settings.RMATRIX_DEFAULT_Q[0]
        tol = tol if tol is not None else settings.RMATRIX_DEFAULT_TOL
        label = f"{p.label} {p.weights}, {source}, q={q}"
    else:
        q, tol = None, None
        label = f"{p.label} {p.weights}, {source}, exact"
    g, e = build_g1(p, source), build_e1(p)
    kets = g.kets()
    reports = [
        _column_report(relation, kets, lhs, rhs, mode == 'exact', tol, label)
        for relation, (lhs, rhs) in two_site_relations(p, g, e, q).items()
    ]
    if braid:
        reports.append(_braid_report(p, g, q, tol, label))
    if source == 'printed':
        _attach_corrections(reports, p, q)
    for report in reports:
        logger.debug(report.summary())
    return reports


# -- norms -------------------------------------------------------------------

def norm_square(p, m):
    """N_m^2 = r^2 - r q^m (q - q^-1)."""
    return p.r * p.r - p.r * Scalar.q_power(m) * T


@dataclass
class NormTable:
    """
    Squared norms of the |-m,m> kets and, for B, of |0,0>.

    N_0^2 is a quotient of two Scalars that is not a q-number fraction, so
    it is kept as a numerator/denominator pair.
    """
    params: SeriesParams
    squares: Dict[int, Scalar] = field(default_factory=dict)
    zero_numerator: Optional[Scalar] = None
    zero_denominator: Optional[Scalar] = None

    @property
    def zero(self):
        if not self.params.has_zero:
            raise SeriesError(f"{self.params.label} has no |0,0> ket and no N_0.")
        return self.zero_numerator, self.zero_denominator

    def presentation(self, m):
        square = self.squares[m]
        try:
            return str(square.sqrt())
        except ScalarError:
            return f"sqrt({square})"


def norm_constants(p):
    table = NormTable(p, {m: norm_square(p, m) for m in range(1, p.n + 1)})
    if p.has_zero:
        numerator = ZERO
        for m in range(1, p.n + 1):
            a, b = a_coefficient(p, m), b_coefficient(p, m)
            numerator = numerator + a * a * p.r * (p.r - Scalar.q_power(m + 1) + Scalar.q_power(m - 1)) + b * b
        c0 = c_coefficient(p)
        table.zero_numerator = numerator
        table.zero_denominator = ONE + T * (c0 - p.rinv) + c0 * c0
    return table


# -- contraction eigenvalue ----------------------------------------------------

def eg_verdict(p):
    """True when e g = r^-1 e holds exactly for the default g1 of ``p``."""
    lhs, rhs = two_site_relations(p, build_g1(p), build_e1(p))[EG]
    return not any(value for value in (lhs - rhs).flat)


@timed
def discrepancy_report(series, n, q=None):
    """
    Literal weight sum against the standard contraction eigenvalue, with
    the e g = r^-1 e verdict for literal and balanced weights.
    """
    q = q if q is not None else settings.RMATRIX_DEFAULT_Q[0]
    literal = SeriesParams(series, n, 'literal')
    balanced = SeriesParams(series, n, 'balanced')
    report = Report(relation='contraction eigenvalue', space=f"{literal.label}, q={q}")
    report.record_case()
    agrees = literal.x == literal.standard_x
    if not agrees:
        report.record_failure(literal_x=str(literal.x), standard_x=str(literal.standard_x))
    literal_eg, balanced_eg = eg_verdict(literal), eg_verdict(balanced)
    report.details.update(
        literal_x=str(literal.x),
        standard_x=str(literal.standard_x),
        balanced_x=str(balanced.x),
        literal_x_float=eval_float(literal.x, q),
        standard_x_float=eval_float(literal.standard_x, q),
        literal_eg=literal_eg,
        balanced_eg=balanced_eg,
        balanced_weights={str(k): str(balanced.weight(k)) for k in balanced.index_set},
    )
    report.explained = not agrees and balanced_eg
    logger.info("%s: literal x %s, standard x %s", literal.label, literal.x, literal.standard_x)
    return report


def bmw_matrix(p, source=None):
    """g1 of a series as a KetOperator; relation-derived for balanced weights."""
    return build_g1(p, source)
