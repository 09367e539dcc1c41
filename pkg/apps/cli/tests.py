import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from apps.core.exceptions import ConfigurationError
from apps.core.reports import Report
from apps.scalar.scalar import Q

from .config import merge_options, read_config_file
from .serializers import RunConfigSerializer
from .writers import render_json


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class RunConfigSerializerTests(SimpleTestCase):

    def validate(self, **data):
        serializer = RunConfigSerializer(data={'command': 'compute', **data})
        return serializer.is_valid(), serializer

    def test_defaults(self):
        valid, serializer = self.validate(shape='2')
        self.assertTrue(valid, serializer.errors)
        cfg = serializer.validated_data
        self.assertEqual(cfg['n'], 3)
        self.assertEqual(cfg['q'], [0.7, 1.3])
        self.assertEqual(cfg['tol'], 1e-9)
        self.assertEqual(cfg['format'], 'json')

    def test_invalid_q_samples(self):
        for q in (['1.0'], ['-0.5'], ['0'], []):
            valid, serializer = self.validate(shape='1', q=q)
            self.assertFalse(valid, q)
            self.assertIn('q', serializer.errors)

    def test_invalid_tol(self):
        valid, serializer = self.validate(shape='1', tol='0')
        self.assertFalse(valid)
        self.assertIn('tol', serializer.errors)

    def test_shape_xor_series(self):
        self.assertFalse(self.validate()[0])
        self.assertFalse(self.validate(shape='1', series='B')[0])
        valid, serializer = self.validate(series='C')
        self.assertTrue(valid)
        self.assertEqual(serializer.validated_data['rank'], 1)

    def test_alphabet_and_rank_bounds(self):
        valid, serializer = self.validate(shape='21', n='2')
        self.assertFalse(valid)
        self.assertIn('n', serializer.errors)
        self.assertFalse(self.validate(series='B', rank='0')[0])
        self.assertFalse(self.validate(shape='3')[0])


class ConfigFileTests(SimpleTestCase):

    def test_read_and_override(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'run.cfg'
            path.write_text('# run\nshape=2\nn=4\nq=0.7,1.3\nexact=true\nformat=csv\n')
            config = read_config_file(path)
            merged = merge_options('compute', {'config': str(path), 'format': 'latex', 'q': None})
        self.assertEqual(config['shape'], '2')
        self.assertEqual(config['q'], ['0.7', '1.3'])
        self.assertIs(config['exact'], True)
        self.assertEqual(merged['format'], 'latex')
        self.assertEqual(merged['n'], '4')
        self.assertEqual(merged['command'], 'compute')

    def test_unknown_key_and_missing_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'run.cfg'
            path.write_text('colour=blue\n')
            with self.assertRaises(ConfigurationError):
                read_config_file(path)
        with self.assertRaises(ConfigurationError):
            read_config_file('/nonexistent/run.cfg')


class RenderJsonTests(SimpleTestCase):

    def test_keys_sorted_at_every_depth(self):
        payload = {'b': {'d': 1, 'c': [{'z': 1, 'y': 2}]}, 'a': (0.5, None)}
        text = render_json(payload)
        self.assertEqual(text, json.dumps(payload, sort_keys=True, indent=2) + '\n')
        self.assertLess(text.index('"a"'), text.index('"b"'))
        self.assertLess(text.index('"y"'), text.index('"z"'))

    def test_same_bytes_between_runs(self):
        first = run('verify', '--suite', 'golden', '--shape', '1')
        self.assertEqual(first, run('verify', '--suite', 'golden', '--shape', '1'))


class ComputeCommandTests(SimpleTestCase):

    def test_json_matrix(self):
        data = json.loads(run('compute', '--shape', '1', '--n', '2'))
        self.assertEqual(data['shape'], '1')
        self.assertEqual(data['n'], 2)
        self.assertEqual(len(data['blocks']), 3)

    def test_output_is_deterministic(self):
        self.assertEqual(run('compute', '--shape', '2', '--n', '3'), run('compute', '--shape', '2', '--n', '3'))

    def test_csv_matrix(self):
        lines = run('compute', '--shape', '1', '--n', '2', '--format', 'csv').splitlines()
        self.assertEqual(lines[0], 'row,col,value')
        self.assertEqual(lines[1], f'"1,1","1,1",{Q}')
        self.assertEqual(len(lines), 6)

    def test_latex_matrix(self):
        text = run('compute', '--shape', '1', '--n', '2', '--format', 'latex')
        self.assertTrue(text.startswith(r'\begin{tabular}{lll}'))
        self.assertIn(r'\end{tabular}', text)

    def test_series_matrix(self):
        data = json.loads(run('compute', '--series', 'B', '--rank', '1'))
        self.assertEqual(data['series'], 'B')
        self.assertEqual(len(data['kets']), 9)

    def test_usage_errors(self):
        for args in (('--shape', '21', '--n', '2'), ('--shape', '1', '--series', 'B'),
                     ('--shape', '1', '--format', 'xml'), ('--shape', '1', '--n', 'many')):
            with self.assertRaises(CommandError, msg=args) as ctx:
                run('compute', *args)
            self.assertEqual(ctx.exception.returncode, 2)

    def test_config_file_and_output(self):
        with tempfile.TemporaryDirectory() as tmp:
            config = Path(tmp) / 'run.cfg'
            config.write_text('shape=1\nn=2\nformat=csv\n')
            target = Path(tmp) / 'out' / 'r.csv'
            self.assertEqual(run('compute', '--config', str(config), '--output', str(target)), '')
            self.assertEqual(target.read_text().splitlines()[0], 'row,col,value')


class EvalCommandTests(SimpleTestCase):

    def test_single_box_at_two(self):
        lines = run('eval', '--shape', '1', '--n', '2', '--q', '2.0').splitlines()
        self.assertEqual(len(lines), 5)
        self.assertEqual(lines[0], 'q=2,"1,1","1,2","2,1","2,2"')
        self.assertEqual(lines[1], '"1,1",2,0,0,0')
        self.assertEqual(lines[3], '"2,1",0,1,1.5,0')

    def test_symmetric_shape_dimensions(self):
        data = json.loads(run('eval', '--shape', '2', '--n', '2', '--q', '0.7', '--format', 'json'))
        self.assertEqual(len(data), 1)
        self.assertEqual(len(data[0]['values']), 9)
        self.assertEqual(len(data[0]['values'][0]), 9)

    def test_excluded_point(self):
        with self.assertRaises(CommandError) as ctx:
            run('eval', '--shape', '1', '--q', '1.0')
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):

    def test_single_box_golden(self):
        data = json.loads(run('verify', '--suite', 'golden', '--shape', '1'))
        self.assertTrue(data['ok'])
        self.assertEqual(len(data['reports']), 1)

    def test_default_bmw_suite(self):
        lines = run('verify', '--suite', 'bmw', '--q', '0.8', '--format', 'csv').splitlines()
        self.assertEqual(lines[0], 'relation,space,cases,failures,max_residual,status')
        self.assertFalse(any(line.endswith(',FAIL') for line in lines))

    def test_rank_two_b_series_is_explained(self):
        lines = run('verify', '--suite', 'bmw', '--series', 'B', '--rank', '2', '--q', '0.8', '--format', 'csv').splitlines()
        self.assertTrue(any(line.endswith(',EXPLAINED') for line in lines))
        self.assertFalse(any(line.endswith(',FAIL') for line in lines))

    def test_unexplained_failure_exits_one(self):
        failed = Report(relation='ybe', space='n=2', cases=1, failure_count=1)
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'report.json'
            with mock.patch('apps.cli.management.commands.verify.run_suites', return_value=[failed]):
                with self.assertRaises(CommandError) as ctx:
                    run('verify', '--suite', 'ybe', '--output', str(target))
            self.assertEqual(ctx.exception.returncode, 1)
            self.assertFalse(json.loads(target.read_text())['ok'])

    def test_unknown_suite(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify', '--suite', 'everything')
        self.assertEqual(ctx.exception.returncode, 2)
