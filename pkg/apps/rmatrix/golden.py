"""
Published R matrix tables and their comparison with computed matrices.

A column of a published table is one relation ``R|c> = sum_b M[b,c] |b>``.
Its verdict is ``exact`` when the computed column has exactly the listed
rows with equal values, ``invalid-label`` when a label of the relation is
not a Weyl tableau pair of one content class, and ``mismatch`` otherwise.
Non-exact columns carry the computed column and the evidence gathered for
the shape (YBE, intertwiners, transpose symmetry) and, per unequal entry,
the printed value at the transposed position.
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings

from apps.core.exceptions import GoldenDataError, RMatrixError, ScalarError, TableauError
from apps.core.reports import Report
from apps.core.timing import timed
from apps.coupling.tableaux import SHAPES
from apps.scalar.parsing import parse_scalar
from apps.tensor.state import format_coefficient

from .checks import intertwiner_check, ybe_check
from .matrix import compute_rmatrix, pair_text, parse_pair

logger = logging.getLogger(__name__)

EXACT = 'exact'
MISMATCH = 'mismatch'
INVALID_LABEL = 'invalid-label'

# Generic letters i < j < k < l stand for 1..n; the [21] table is complete for n = 3.
GOLDEN_ALPHABET = {'1': 3, '2': 4, '11': 4, '21': 3}


@dataclass(frozen=True)
class GoldenRecord:
    shape: str
    column: str
    row: str
    text: str
    line: int

    @property
    def value(self):
        return parse_scalar(self.text)


def golden_path(path=None):
    return Path(path or settings.RMATRIX_GOLDEN_PATH)


def load_golden(path=None):
    """
    Read every record of the golden data file.

    Raises GoldenDataError for a missing file or a malformed line.
    """
    path = golden_path(path)
    if not path.is_file():
        raise GoldenDataError(f"Golden data file {path} not found.")
    records = []
    for number, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = [part.strip() for part in line.split('|')]
        if len(fields) != 4 or not all(fields):
            raise GoldenDataError(f"{path}:{number}: expected 'shape | column | row | value'.")
        shape, column, row, text = fields
        if shape not in SHAPES:
            raise GoldenDataError(f"{path}:{number}: unknown shape [{shape}].")
        try:
            parse_scalar(text)
        except ScalarError as exc:
            raise GoldenDataError(f"{path}:{number}: {exc}")
        records.append(GoldenRecord(shape, column, row, text, number))
    logger.debug("Loaded %d golden records from %s", len(records), path)
    return records


def golden_relations(shape, path=None):
    """Records of one shape grouped by column text, in file order."""
    relations = OrderedDict()
    for record in load_golden(path):
        if record.shape == shape:
            relations.setdefault(record.column, []).append(record)
    if not relations:
        raise GoldenDataError(f"No golden records for shape [{shape}].")
    return relations


def _content(label):
    return tuple(sorted(label[0].letters + label[1].letters))


def _parse_relation(shape, column, records):
    """(column label, [(row label, record)]) or a reason the labels are invalid."""
    try:
        col = parse_pair(column, shape)
        rows = [(parse_pair(record.row, shape), record) for record in records]
    except TableauError as exc:
        return None, str(exc)
    for row, record in rows:
        if _content(row) != _content(col):
            return None, f"Row {record.row} has a different content from column {column}."
    labels = [row for row, _ in rows]
    if len(set(labels)) != len(labels):
        return None, f"Column {column} lists a row twice."
    return (col, rows), None


def compare_relation(matrix, column, records):
    """Verdict dict for one published column against a computed matrix."""
    verdict = {'column': column, 'lines': [record.line for record in records]}
    parsed, reason = _parse_relation(matrix.shape, column, records)
    if parsed is None:
        verdict.update(verdict=INVALID_LABEL, reason=reason)
        return verdict
    col, rows = parsed
    if not all(letter <= matrix.n for letter in _content(col)):
        verdict.update(verdict=INVALID_LABEL, reason=f"Column {column} needs more than {matrix.n} letters.")
        return verdict
    computed = matrix.column(col)
    entries = []
    matched = len(computed) == len(rows)
    for row, record in rows:
        printed = record.value
        value = computed.get(row, matrix.zero)
        equal = printed == value
        matched = matched and equal and row in computed
        entries.append({
            'row': record.row,
            'printed': str(printed),
            'computed': format_coefficient(value),
            'equal': equal,
        })
    listed = {row for row, _ in rows}
    missing = [
        {'row': pair_text(row, symbolic=True), 'computed': format_coefficient(value)}
        for row, value in sorted(computed.items()) if row not in listed
    ]
    verdict.update(verdict=EXACT if matched else MISMATCH, entries=entries)
    if missing:
        verdict['unlisted'] = missing
    return verdict


def transpose_check(matrix):
    """M[b, c] = M[c, b] for every stored entry of an exact matrix."""
    report = Report(relation='transpose symmetry', space=f"[{matrix.shape}] n={matrix.n}")
    for row, col, value in matrix.items():
        report.record_case()
        other = matrix.entry(col, row)
        if other != value:
            report.record_failure(row=pair_text(row), col=pair_text(col),
                                  value=str(value), transposed=str(other))
    return report


def gather_evidence(shape, n, q_samples, tol, matrix=None):
    """Structural checks backing a non-exact comparison."""
    reports = [ybe_check(shape, n, mode='float', q=q, tol=tol) for q in q_samples]
    if shape != '1':
        reports.extend(intertwiner_check(shape, q=q_samples[0], tol=tol))
    reports.append(transpose_check(compute_rmatrix(shape, n) if matrix is None else matrix))
    return {
        'reports': [report.summary() for report in reports],
        'passed': all(report.passed for report in reports),
        # compute_rmatrix raises on any non-zero exact residual
        'reconstruction_residual': 0,
    }


def printed_entries(shape, relations):
    """{(row label, column label): record} over the columns with valid labels."""
    printed = {}
    for column, records in relations.items():
        parsed, _ = _parse_relation(shape, column, records)
        if parsed is not None:
            col, rows = parsed
            printed.update(((row, col), record) for row, record in rows)
    return printed


def _mark_transposes(verdict, shape, printed):
    """Compare each unequal printed entry with the printed entry at the transposed position."""
    col = parse_pair(verdict['column'], shape)
    for entry in verdict.get('entries', ()):
        if entry['equal']:
            continue
        row = parse_pair(entry['row'], shape)
        other = printed.get((col, row))
        if other is None:
            continue
        entry['printed_transpose'] = other.text
        entry['transpose_consistent'] = other.value == printed[(row, col)].value


@timed
def golden_compare(shape, n=None, path=None, q_samples=None, tol=None):
    """
    Compare the published table of one shape with the exact computed matrix.

    Returns a Report whose cases are the published columns; details carry
    the per-column verdicts and the evidence block.
    """
    n = n or GOLDEN_ALPHABET.get(shape)
    if n is None:
        raise GoldenDataError(f"No golden table for shape [{shape}].")
    q_samples = list(q_samples or settings.RMATRIX_DEFAULT_Q)
    tol = tol if tol is not None else settings.RMATRIX_DEFAULT_TOL
    relations = golden_relations(shape, path)
    matrix = compute_rmatrix(shape, n)
    report = Report(relation=f"golden [{shape}]", space=f"n={n}", tol=tol)
    verdicts = []
    for column, records in relations.items():
        try:
            verdict = compare_relation(matrix, column, records)
        except RMatrixError as exc:
            verdict = {'column': column, 'verdict': INVALID_LABEL, 'reason': str(exc)}
        verdicts.append(verdict)
        report.record_case()
        if verdict['verdict'] != EXACT:
            report.record_failure(column=column, verdict=verdict['verdict'])
    counts = {
        key: sum(1 for v in verdicts if v['verdict'] == key)
        for key in (EXACT, MISMATCH, INVALID_LABEL)
    }
    report.details.update(counts=counts, verdicts=verdicts)
    if report.failure_count:
        evidence = gather_evidence(shape, n, q_samples, tol, matrix)
        report.details['evidence'] = evidence
        report.explained = evidence['passed']
        printed = printed_entries(shape, relations)
        for verdict in verdicts:
            if verdict['verdict'] == MISMATCH:
                _mark_transposes(verdict, shape, printed)
            if verdict['verdict'] != EXACT:
                verdict['explained'] = evidence['passed']
    logger.info("golden [%s]: %s", shape, counts)
    return report
