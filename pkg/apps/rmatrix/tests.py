import tempfile
from pathlib import Path

import numpy as np
from django.test import SimpleTestCase, override_settings

from apps.core.exceptions import GoldenDataError, TableauError
from apps.scalar.scalar import ONE, Q, QINV, T, eval_float

from .checks import intertwiner_check, letter_pattern, n_independence_check, ybe_check
from .golden import (
    EXACT,
    INVALID_LABEL,
    MISMATCH,
    compare_relation,
    golden_compare,
    golden_relations,
    load_golden,
    transpose_check,
)
from .matrix import compute_rmatrix, pair_text, parse_pair
from .serializers import LabeledMatrixSerializer


def pair(text, shape):
    return parse_pair(text, shape)


class ComputeRMatrixTests(SimpleTestCase):

    def test_single_box_rules(self):
        matrix = compute_rmatrix('1', 3)
        self.assertEqual(matrix.entry(pair('i,i', '1'), pair('i,i', '1')), Q)
        self.assertEqual(matrix.entry(pair('j,i', '1'), pair('i,j', '1')), ONE)
        self.assertEqual(matrix.entry(pair('j,i', '1'), pair('j,i', '1')), T)
        self.assertEqual(matrix.entry(pair('i,j', '1'), pair('j,i', '1')), ONE)
        self.assertEqual(len(matrix.column(pair('i,j', '1'))), 1)

    def test_entries_vanish_between_content_classes(self):
        matrix = compute_rmatrix('1', 3)
        self.assertTrue(matrix.entry(pair('k,i', '1'), pair('i,j', '1')).is_zero())
        for block in matrix.blocks:
            for (row, col) in block.entries:
                self.assertIs(matrix.block_of(row), block)

    def test_symmetric_diagonal(self):
        matrix = compute_rmatrix('2', 2)
        self.assertEqual(matrix.entry(pair('ii,ii', '2'), pair('ii,ii', '2')), Q ** 4)

    def test_symmetric_mixed_column(self):
        matrix = compute_rmatrix('2', 2)
        column = matrix.column(pair('ij,ij', '2'))
        self.assertEqual(set(column), {pair('ij,ij', '2'), pair('jj,ii', '2')})
        self.assertEqual(column[pair('ij,ij', '2')], Q * Q)
        self.assertEqual(column[pair('jj,ii', '2')], Q ** 3 - QINV)

    def test_single_box_hecke_spectrum(self):
        q = 0.7
        r = compute_rmatrix('1', 3).to_numpy(q)
        eye = np.eye(len(r))
        product = (r - q * eye) @ (r + eye / q)
        self.assertLess(np.abs(product).max(), 1e-12)

    def test_exact_and_float_agree(self):
        exact = compute_rmatrix('2', 3)
        for q in (0.7, 1.3):
            floated = compute_rmatrix('2', 3, q=q)
            for row, col, value in floated.items():
                self.assertAlmostEqual(value, eval_float(exact.entry(row, col), q), delta=1e-10)
            for row, col, value in exact.items():
                self.assertAlmostEqual(floated.entry(row, col), eval_float(value, q), delta=1e-10)

    def test_alphabet_too_small(self):
        with self.assertRaises(TableauError):
            compute_rmatrix('21', 2)
        with self.assertRaises(TableauError):
            compute_rmatrix('11', 1)

    def test_mixed_shape_closes(self):
        matrix = compute_rmatrix('21', 3)
        self.assertEqual(len(matrix.labels()), 64)
        top = pair('ii/j,ii/j', '21')
        self.assertEqual(matrix.entry(top, top), Q ** 5)

    def test_pair_text(self):
        label = pair('ij/k,ii/j', '21')
        self.assertEqual(pair_text(label), '12/3,11/2')
        self.assertEqual(pair_text(label, symbolic=True), 'ij/k,ii/j')
        with self.assertRaises(TableauError):
            pair('ij', '2')


class LabeledMatrixSerializerTests(SimpleTestCase):

    def test_block_layout(self):
        data = LabeledMatrixSerializer(compute_rmatrix('1', 2)).data
        self.assertEqual(data['shape'], '1')
        self.assertEqual(data['n'], 2)
        self.assertIsNone(data['q'])
        contents = [block['content'] for block in data['blocks']]
        self.assertEqual(contents, [[1, 1], [1, 2], [2, 2]])
        mixed = data['blocks'][1]
        self.assertEqual(mixed['rows'], ['1,2', '2,1'])
        self.assertEqual(mixed['entries'], [
            ['2,1', '1,2', '1'],
            ['1,2', '2,1', '1'],
            ['2,1', '2,1', 'q - q^-1'],
        ])


class GoldenDataTests(SimpleTestCase):

    def test_loads_every_shape(self):
        records = load_golden()
        self.assertEqual({record.shape for record in records}, {'1', '2', '11', '21'})
        self.assertEqual(len(golden_relations('1')), 3)
        self.assertEqual(len(golden_relations('11')), 12)

    def test_missing_file(self):
        with self.assertRaises(GoldenDataError):
            load_golden('/nonexistent/golden.txt')
        with override_settings(RMATRIX_GOLDEN_PATH='/nonexistent/golden.txt'):
            with self.assertRaises(GoldenDataError):
                load_golden()

    def test_malformed_lines(self):
        for body in ('1 | i,i | q\n', '7 | i,i | i,i | q\n', '1 | i,i | i,i | q +\n'):
            with tempfile.TemporaryDirectory() as tmp:
                path = Path(tmp) / 'golden.txt'
                path.write_text('# header\n' + body)
                with self.assertRaises(GoldenDataError, msg=body):
                    load_golden(path)

    def test_unsupported_division_is_golden_error(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'golden.txt'
            path.write_text('1 | i,i | i,i | 1/(q + 1)\n')
            with self.assertRaises(GoldenDataError):
                load_golden(path)

    def test_verdict_counts(self):
        expected = {
            '1': (3, 0, 0),
            '2': (18, 4, 2),
            '11': (12, 0, 0),
            '21': (47, 7, 2),
        }
        for shape, (exact, mismatch, invalid) in expected.items():
            counts = golden_compare(shape, q_samples=[0.7]).details['counts']
            self.assertEqual(counts, {EXACT: exact, MISMATCH: mismatch, INVALID_LABEL: invalid}, shape)

    def test_computed_matrices_are_symmetric(self):
        for shape, n in (('1', 3), ('2', 3), ('11', 4), ('21', 3)):
            report = transpose_check(compute_rmatrix(shape, n))
            self.assertTrue(report.passed, report.failures)
            self.assertGreater(report.cases, 0)

    def test_mismatch_carries_printed_transpose(self):
        report = golden_compare('2', q_samples=[0.7])
        self.assertTrue(any('transpose symmetry' in line for line in report.details['evidence']['reports']))
        for verdict in report.details['verdicts']:
            for entry in verdict.get('entries', ()):
                if 'printed_transpose' in entry:
                    self.assertFalse(entry['equal'])
                    self.assertIn('transpose_consistent', entry)

    def test_single_box_table_is_exact(self):
        report = golden_compare('1')
        self.assertTrue(report.passed)
        self.assertEqual(report.details['counts'][EXACT], 3)

    def test_symmetric_relations(self):
        matrix = compute_rmatrix('2', 4)
        relations = golden_relations('2')
        self.assertEqual(compare_relation(matrix, 'ii,ii', relations['ii,ii'])['verdict'], EXACT)
        self.assertEqual(compare_relation(matrix, 'ij,ij', relations['ij,ij'])['verdict'], EXACT)
        flagged = compare_relation(matrix, 'kl,ij', relations['kl,ij'])
        self.assertEqual(flagged['verdict'], INVALID_LABEL)
        flagged = compare_relation(matrix, 'il,jk', relations['il,jk'])
        self.assertEqual(flagged['verdict'], INVALID_LABEL)

    def test_mismatch_reports_both_values(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'golden.txt'
            path.write_text('1 | i,i | i,i | q^2\n1 | i,j | j,i | 1\n')
            report = golden_compare('1', path=path, q_samples=[0.7])
        self.assertFalse(report.passed)
        self.assertEqual(report.details['counts'], {'exact': 1, 'mismatch': 1, 'invalid-label': 0})
        verdict = report.details['verdicts'][0]
        self.assertEqual(verdict['entries'][0]['printed'], 'q^2')
        self.assertEqual(verdict['entries'][0]['computed'], 'q')
        self.assertTrue(report.details['evidence']['passed'])
        self.assertTrue(report.explained)
        self.assertTrue(report.ok)


class StructuralCheckTests(SimpleTestCase):

    def test_ybe_exact_single_box(self):
        for n in (2, 3):
            report = ybe_check('1', n, mode='exact')
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report.cases, n ** 3)

    def test_ybe_float(self):
        report = ybe_check('2', 2, mode='float', q=0.7, tol=1e-10)
        self.assertTrue(report.passed)
        self.assertEqual(report.cases, 27)
        report = ybe_check('11', 3, mode='float', q=1.3, tol=1e-10)
        self.assertTrue(report.passed)

    def test_ybe_exact_symmetric(self):
        self.assertTrue(ybe_check('2', 2, mode='exact').passed)

    def test_intertwiners_exact(self):
        for shape in ('2', '11'):
            reports = intertwiner_check(shape)
            self.assertEqual(len(reports), 3)
            for report in reports:
                self.assertTrue(report.passed, report.summary())
                self.assertEqual(report.cases, 81)

    def test_three_site_intertwiners_float(self):
        for report in intertwiner_check('21', q=0.7, tol=1e-9):
            self.assertTrue(report.passed, report.summary())

    def test_single_box_has_no_intertwiners(self):
        with self.assertRaises(TableauError):
            intertwiner_check('1')

    def test_letter_pattern(self):
        row, col = pair('24,13', '2'), pair('13,24', '2')
        self.assertEqual(letter_pattern(row, col), (pair('24,13', '2'), pair('13,24', '2')))
        row, col = pair('35,15', '2'), pair('15,35', '2')
        self.assertEqual(letter_pattern(row, col), (pair('23,13', '2'), pair('13,23', '2')))

    def test_n_independence(self):
        report = n_independence_check('1', 2, 4)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.details['classes'], 5)
        for shape in ('2', '11'):
            self.assertTrue(n_independence_check(shape, 3, 4).passed)

    def test_n_independence_four_and_five_letters(self):
        for shape, classes in (('2', 102), ('11', 49)):
            report = n_independence_check(shape, 4, 5)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report.details['classes'], classes)
