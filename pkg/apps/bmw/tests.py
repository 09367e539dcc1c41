import numpy as np
from django.test import SimpleTestCase

from apps.core.exceptions import SeriesError
from apps.core.reports import all_ok
from apps.hecke.action import HeckeAction
from apps.scalar.scalar import ONE, Q, QINV, T, eval_float, qnum
from apps.tensor.state import State

from .operators import build_e1, build_g1_printed, build_g1_relations, printed_zero_column
from .relations import (
    BRAID,
    CUBIC,
    EE,
    EG,
    G_RELATIONS,
    X_DEPENDENT,
    corrected_g1,
    corrected_residuals,
    discrepancy_report,
    eg_verdict,
    norm_constants,
    verify_bmw,
)
from .serializers import KetOperatorSerializer, NormTableSerializer
from .series import SeriesParams

B1 = SeriesParams('B', 1)
B2 = SeriesParams('B', 2)


def basis(p, ket):
    return State.basis(p.space(2), ket)


class SeriesParamsTests(SimpleTestCase):

    def test_invalid_parameters(self):
        for args in (('E', 1), ('B', 0), ('C', 2, 'odd')):
            with self.assertRaises(SeriesError, msg=args):
                SeriesParams(*args)
        with self.assertRaises(SeriesError):
            SeriesParams('C', 1).weight(0)

    def test_index_sets_and_r(self):
        self.assertEqual(B1.index_set, (-1, 0, 1))
        self.assertEqual(SeriesParams('C', 2).index_set, (-2, -1, 1, 2))
        self.assertEqual(B2.r, Q ** 4)
        self.assertEqual(SeriesParams('D', 2).r, Q ** 3)
        self.assertEqual(SeriesParams('C', 1).r * Q ** 3, ONE)

    def test_balanced_weights_reach_standard_x(self):
        for series in ('B', 'C', 'D'):
            for n in (1, 2, 3):
                p = SeriesParams(series, n, 'balanced')
                self.assertEqual(p.x, p.standard_x, p.label)

    def test_literal_x(self):
        self.assertEqual(B1.x, QINV + ONE + Q)
        self.assertEqual(B1.x, B1.standard_x)
        self.assertNotEqual(B2.x, B2.standard_x)


class ContractionTests(SimpleTestCase):

    def test_single_rank_example(self):
        image = build_e1(B1)(basis(B1, (1, -1)))
        expected = State(B1.space(2), {(-1, 1): QINV, (0, 0): -ONE, (1, -1): Q})
        self.assertEqual(image, expected)

    def test_kills_non_opposite_kets(self):
        e = build_e1(B2)
        for ket in ((1, 1), (1, 0), (2, -1), (-2, 1)):
            self.assertTrue(e(basis(B2, ket)).is_zero(), ket)

    def test_square_is_multiple(self):
        e = build_e1(B1)
        v = basis(B1, (0, 0))
        self.assertEqual(e(e(v)), e(v) * (QINV + ONE + Q))


class GeneratorTests(SimpleTestCase):

    def test_printed_rules(self):
        g = build_g1_printed(B2)
        self.assertEqual(g(basis(B2, (2, 2))), basis(B2, (2, 2)) * Q)
        self.assertEqual(g(basis(B2, (2, -2))), basis(B2, (-2, 2)) * (QINV ** 4))
        self.assertEqual(g(basis(B2, (2, 1))), basis(B2, (1, 2)))
        self.assertEqual(g(basis(B2, (1, 2))), basis(B2, (1, 2)) * T + basis(B2, (2, 1)))

    def test_zero_column_needs_zero_letter(self):
        with self.assertRaises(SeriesError):
            printed_zero_column(SeriesParams('C', 1))

    def test_single_rank_zero_column(self):
        column = build_g1_printed(B1).column((0, 0))
        self.assertEqual(set(column), {(0, 0), (-1, 1)})
        self.assertEqual(column[(0, 0)], ONE)
        self.assertEqual(column[(-1, 1)], ONE - QINV * QINV)

    def test_printed_matches_relations_at_rank_one(self):
        printed, relations = build_g1_printed(B1), build_g1_relations(B1)
        for ket in B1.space(2).kets():
            self.assertEqual(printed(basis(B1, ket)), relations(basis(B1, ket)), ket)

    def test_non_opposite_kets_follow_hecke_rules(self):
        action = HeckeAction(key=lambda a: -a)
        for p in (B2, SeriesParams('C', 2), SeriesParams('D', 2)):
            g = build_g1_printed(p)
            for ket in p.space(2).kets():
                if ket[0] == -ket[1]:
                    continue
                v = basis(p, ket)
                self.assertEqual(g(v), action.apply_g(1, v), (p.label, ket))

    def test_exact_and_float_agree(self):
        g = build_g1_printed(B2)
        exact = g.to_dense()
        floated = g.to_dense(0.8)
        lowered = np.vectorize(lambda value: eval_float(value, 0.8), otypes=[float])(exact)
        self.assertLess(np.abs(floated - lowered).max(), 1e-12)


class RelationTests(SimpleTestCase):

    def test_single_rank_exact(self):
        reports = {report.relation: report for report in verify_bmw(B1, braid=False)}
        self.assertEqual(len(reports), 6)
        for report in reports.values():
            self.assertTrue(report.passed, report.summary())
            self.assertEqual(report.cases, 9)

    def test_single_rank_cubic_float(self):
        reports = verify_bmw(B1, mode='float', q=0.8, tol=1e-10)
        cubic = next(report for report in reports if report.relation == CUBIC)
        self.assertTrue(cubic.passed)
        self.assertLess(cubic.max_residual, 1e-10)
        self.assertEqual(reports[-1].relation, BRAID)
        self.assertEqual(reports[-1].cases, 27)

    def test_literal_rank_two_violates_eg(self):
        reports = {report.relation: report for report in verify_bmw(B2, braid=False)}
        self.assertTrue(reports[EE].passed)
        self.assertFalse(reports[EG].passed)
        self.assertIn('corrected', reports[EG].failures[0])
        self.assertIn('corrected_residual', reports[EG].details)
        self.assertFalse(eg_verdict(B2))

    def test_literal_rank_two_failures_are_explained(self):
        reports = verify_bmw(B2, braid=False)
        failing = [report for report in reports if report.failure_count]
        self.assertTrue(failing)
        for report in failing:
            self.assertIn(report.relation, G_RELATIONS)
            self.assertLess(report.details['corrected_residual'], 1e-10, report.relation)
            self.assertTrue(report.explained, report.relation)
            if report.relation in X_DEPENDENT:
                self.assertIn('corrected_relation', report.details)
        self.assertTrue(all_ok(reports))

    def test_balanced_weights_satisfy_eg(self):
        for series in ('B', 'C', 'D'):
            p = SeriesParams(series, 2, 'balanced')
            self.assertTrue(eg_verdict(p), p.label)


class CorrectionTests(SimpleTestCase):

    def test_single_rank_correction_is_printed_g(self):
        printed = build_g1_printed(B1).to_dense(0.8)
        self.assertLess(np.abs(corrected_g1(B1, 0.8) - printed).max(), 1e-10)

    def test_rank_two_correction_satisfies_relations(self):
        for q in (0.8, 1.3):
            G = corrected_g1(B2, q)
            residuals = corrected_residuals(B2, G, build_e1(B2).to_dense(q), q)
            self.assertEqual(set(residuals), set(G_RELATIONS))
            for relation, residual in residuals.items():
                self.assertLess(residual, 1e-10, (q, relation))

    def test_correction_keeps_fixed_columns(self):
        G = corrected_g1(B2, 0.8)
        printed = build_g1_printed(B2).to_dense(0.8)
        kets = list(B2.space(2).kets())
        for ket in kets:
            if ket[0] != -ket[1] or ket[0] > 0:
                col = kets.index(ket)
                self.assertLess(np.abs(G[:, col] - printed[:, col]).max(), 1e-10, ket)


class DiscrepancyTests(SimpleTestCase):

    def test_rank_two_d_series(self):
        report = discrepancy_report('D', 2, q=2.0)
        self.assertFalse(report.passed)
        self.assertAlmostEqual(report.details['literal_x_float'], 6.75)
        self.assertAlmostEqual(report.details['standard_x_float'], 6.25)
        self.assertTrue(report.details['balanced_eg'])
        self.assertTrue(report.explained)

    def test_rank_one_b_series_agrees(self):
        report = discrepancy_report('B', 1, q=0.8)
        self.assertTrue(report.passed)
        self.assertTrue(report.details['literal_eg'])


class NormTests(SimpleTestCase):

    def test_single_rank_norms(self):
        table = norm_constants(B1)
        self.assertEqual(table.squares[1], Q * Q)
        self.assertAlmostEqual(eval_float(table.squares[1], 2.0), 4.0)
        self.assertEqual(table.presentation(1), str(Q))
        numerator, _ = table.zero
        self.assertEqual(numerator, Q * Q - 2 + QINV * QINV)

    def test_zero_norm_needs_zero_letter(self):
        table = norm_constants(SeriesParams('D', 2))
        with self.assertRaises(SeriesError):
            table.zero
        self.assertIsNone(NormTableSerializer(table).data['zero'])

    def test_squares_are_laurent(self):
        for series in ('B', 'C', 'D'):
            for n in (1, 2, 3):
                for square in norm_constants(SeriesParams(series, n)).squares.values():
                    self.assertTrue(square.is_laurent())


class KetOperatorSerializerTests(SimpleTestCase):

    def test_contraction_layout(self):
        data = KetOperatorSerializer(build_e1(B1)).data
        self.assertEqual(data['series'], 'B')
        self.assertEqual(data['n'], 1)
        self.assertEqual(data['kets'][0], '-1,-1')
        self.assertEqual(len(data['kets']), 9)
        self.assertEqual(len(data['entries']), 9)
        self.assertEqual(data['x'], str(QINV + ONE + Q))

    def test_standard_x_uses_qnumbers(self):
        self.assertEqual(SeriesParams('B', 2).standard_x, ONE + qnum(4))
