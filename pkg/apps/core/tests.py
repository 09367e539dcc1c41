from django.test import SimpleTestCase

from .exceptions import ConfigurationError, RMatrixError, ScalarParseError, SeriesError
from .reports import MAX_RECORDED_FAILURES, Report, all_ok
from .serializers import ReportSerializer
from .timing import Stopwatch, timed


class ReportTests(SimpleTestCase):

    def test_float_report_uses_tolerance(self):
        report = Report(relation='ybe', space='n=2', tol=1e-9)
        report.record_case(1e-12)
        self.assertTrue(report.passed)
        report.record_case(1e-6)
        self.assertFalse(report.passed)
        self.assertEqual(report.max_residual, 1e-6)

    def test_failures_are_capped_but_counted(self):
        report = Report(relation='braid', space='n=2')
        for index in range(MAX_RECORDED_FAILURES + 5):
            report.record_failure(ket=[index])
        self.assertEqual(report.failure_count, MAX_RECORDED_FAILURES + 5)
        self.assertEqual(len(report.failures), MAX_RECORDED_FAILURES)

    def test_merge(self):
        left = Report(relation='braid', space='n=2', cases=3)
        right = Report(relation='braid', space='n=2', cases=4, failure_count=1, max_residual=0.5)
        merged = left.merge(right)
        self.assertEqual(merged.cases, 7)
        self.assertEqual(merged.failure_count, 1)
        self.assertEqual(merged.max_residual, 0.5)
        with self.assertRaises(ValueError):
            left.merge(Report(relation='quadratic', space='n=2'))

    def test_explained_failure_is_ok(self):
        report = Report(relation='quadratic R', space='n=2')
        report.record_failure(ket=[1, 1])
        self.assertFalse(all_ok([report]))
        report.explained = True
        self.assertTrue(all_ok([report]))
        self.assertTrue(report.summary().startswith('EXPLAINED'))

    def test_serializer(self):
        data = ReportSerializer(Report(relation='ybe', space='n=2', cases=8)).data
        self.assertEqual(data['cases'], 8)
        self.assertTrue(data['passed'])
        self.assertIsNone(data['max_residual'])


class ExceptionTests(SimpleTestCase):

    def test_defaults(self):
        error = SeriesError()
        self.assertIsInstance(error, RMatrixError)
        self.assertEqual(error.code, 'series')
        self.assertEqual(str(error), SeriesError.default_detail)
        self.assertEqual(ConfigurationError('bad key').code, 'configuration')

    def test_parse_error_position(self):
        error = ScalarParseError('Unexpected token', position=3, text='q +')
        self.assertEqual(error.position, 3)
        self.assertIn('position 3', str(error))


class TimingTests(SimpleTestCase):

    def test_timed_keeps_result(self):
        @timed
        def double(value):
            return 2 * value

        self.assertEqual(double(4), 8)
        self.assertEqual(double.__name__, 'double')

    def test_stopwatch(self):
        with Stopwatch('block') as sw:
            sum(range(100))
        self.assertGreaterEqual(sw.elapsed, 0.0)
