"""
Output writers for the management commands.

Every writer returns text; row order is fixed by sorted labels so the same
run always produces the same bytes.
"""

import csv
import io
from dataclasses import dataclass
from typing import List

import numpy as np
from rest_framework.renderers import JSONRenderer

from apps.bmw.operators import KetOperator
from apps.bmw.serializers import KetOperatorSerializer, ket_text
from apps.core.serializers import ReportSerializer
from apps.rmatrix.matrix import pair_text
from apps.rmatrix.serializers import LabeledMatrixSerializer
from apps.scalar.scalar import Scalar
from apps.tensor.state import format_coefficient


@dataclass
class NumericMatrix:
    """A matrix evaluated at one q, with the ket labels of its rows and columns."""
    q: float
    labels: List[str]
    values: np.ndarray


def _sorted(value):
    if isinstance(value, dict):
        return {key: _sorted(value[key]) for key in sorted(value)}
    if isinstance(value, (list, tuple)):
        return [_sorted(item) for item in value]
    return value


class SortedJSONRenderer(JSONRenderer):
    """DRF JSON output with keys sorted at every depth."""
    strict = False

    def render(self, data, accepted_media_type=None, renderer_context=None):
        return super().render(_sorted(data), accepted_media_type, renderer_context)


def render_json(payload):
    rendered = SortedJSONRenderer().render(payload, renderer_context={'indent': 2})
    return rendered.decode('utf-8') + '\n'


def _csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerows(rows)
    return buffer.getvalue()


def _latex_value(value):
    if isinstance(value, Scalar):
        return f"${value.to_latex()}$"
    return f"${format_coefficient(value)}$"


def _tabular(header, rows):
    lines = [r'\begin{tabular}{' + 'l' * len(header) + '}', ' & '.join(header) + r' \\', r'\hline']
    lines.extend(' & '.join(row) + r' \\' for row in rows)
    lines.append(r'\end{tabular}')
    return '\n'.join(lines) + '\n'


def matrix_entries(matrix):
    """(row text, col text, value) for the non-zero entries, column-major."""
    if isinstance(matrix, KetOperator):
        return [(ket_text(row), ket_text(col), value) for row, col, value in matrix.items()]
    return [
        (pair_text(row), pair_text(col), value)
        for row, col, value in sorted(matrix.items(), key=lambda item: (item[1], item[0]))
    ]


def render_matrix(matrix, fmt):
    if fmt == 'json':
        if isinstance(matrix, KetOperator):
            return render_json(KetOperatorSerializer(matrix).data)
        return render_json(LabeledMatrixSerializer(matrix).data)
    entries = matrix_entries(matrix)
    if fmt == 'csv':
        return _csv([('row', 'col', 'value')] + [
            (row, col, format_coefficient(value)) for row, col, value in entries
        ])
    return _tabular(('row', 'col', 'value'), [
        (row, col, _latex_value(value)) for row, col, value in entries
    ])


def render_numeric(samples, fmt):
    """One dense block per q sample."""
    if fmt == 'json':
        return render_json([
            {'q': sample.q, 'labels': sample.labels, 'values': sample.values.tolist()}
            for sample in samples
        ])
    if fmt == 'csv':
        rows = []
        for sample in samples:
            rows.append((f"q={sample.q:g}",) + tuple(sample.labels))
            for label, values in zip(sample.labels, sample.values):
                rows.append((label,) + tuple(format_coefficient(float(value)) for value in values))
        return _csv(rows)
    return ''.join(
        f"% q={sample.q:g}\n" + _tabular(
            ('',) + tuple(sample.labels),
            [(label,) + tuple(_latex_value(float(value)) for value in values)
             for label, values in zip(sample.labels, sample.values)],
        )
        for sample in samples
    )


def _status(report):
    if report.passed:
        return 'PASS'
    return 'EXPLAINED' if report.explained else 'FAIL'


def render_reports(reports, fmt):
    if fmt == 'json':
        return render_json({
            'ok': all(report.ok for report in reports),
            'reports': ReportSerializer(reports, many=True).data,
        })
    header = ('relation', 'space', 'cases', 'failures', 'max_residual', 'status')
    rows = [
        (report.relation, report.space, str(report.cases), str(report.failure_count),
         '' if report.max_residual is None else f"{report.max_residual:.3e}", _status(report))
        for report in reports
    ]
    if fmt == 'csv':
        return _csv([header] + rows)
    return _tabular(header, rows)
