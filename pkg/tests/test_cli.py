"""The kpztail command line: exit codes, configuration precedence and table output."""

import csv
import math
import os
import tempfile
import unittest

import orjson
import pytest

from general.Error.error_manager import DomainError, OutputError, UsageError
from Cli import (
    ASSERT,
    REPORT,
    Command,
    OutputFormat,
    ValidationCheck,
    ValidationSuite,
    asserts_passed,
    emit_table,
    parse_and_run,
    render_table,
    resolve_run_config,
)


def read_csv(path):
    with open(path, newline='') as handle:
        return list(csv.reader(handle))


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp, name)

    def run_cli(self, *argv, env=None):
        return parse_and_run(list(argv), env={} if env is None else env)


class TestExitCodes(CliTestCase):

    def test_unknown_command(self):
        self.assertEqual(self.run_cli('bogus'), 2)

    def test_missing_command(self):
        self.assertEqual(self.run_cli(), 2)

    def test_malformed_grid(self):
        self.assertEqual(self.run_cli('tw', '--s', '1,,x', '--output', self.path('t.csv')), 2)

    def test_conflicting_thinning_flags(self):
        self.assertEqual(self.run_cli('thinned', '--x', '0', '--v', '1', '--gamma', '0.5'), 2)

    def test_positive_z(self):
        self.assertEqual(self.run_cli('rate', '--z', '1', '--output', self.path('r.csv')), 2)

    def test_bad_environment(self):
        self.assertEqual(self.run_cli('rate', '--z=-1', env={'KPZTAIL_SEED': 'abc'}), 2)

    def test_domain_failure_is_numeric_exit(self):
        self.assertEqual(self.run_cli('kpz', '--s', '20', '--T', '1e6', '--output', self.path('k.csv')), 1)

    def test_unwritable_output(self):
        target = os.path.join(self.tmp, 'missing', 'out.csv')
        self.assertEqual(self.run_cli('rate', '--z=-1', '--output', target), 1)

    def test_help(self):
        self.assertEqual(self.run_cli('--help'), 0)


class TestCommands(CliTestCase):

    def test_tracy_widom_table(self):
        target = self.path('tw.csv')
        self.assertEqual(self.run_cli('tw', '--s', '0', '--output', target), 0)
        header, row = read_csv(target)
        self.assertEqual(header, ['s', 'F'])
        self.assertAlmostEqual(float(row[1]), 0.96937, delta=2e-5)

    def test_rate_table(self):
        target = self.path('rate.csv')
        self.assertEqual(self.run_cli('rate', '--z=-1e4:-1e-3:500:log', '--output', target), 0)
        rows = read_csv(target)
        self.assertEqual(rows[0], ['z', 'phi_minus', 'phi_tilde', 'ratio'])
        self.assertEqual(len(rows), 501)
        self.assertTrue(all(float(row[3]) >= 1.0 for row in rows[1:]))

    def test_json_output(self):
        target = self.path('rate.json')
        self.assertEqual(self.run_cli('rate', '--z=-2,-1', '--format', 'json', '--output', target), 0)
        with open(target, 'rb') as handle:
            payload = orjson.loads(handle.read())
        self.assertEqual([row['z'] for row in payload], [-2.0, -1.0])
        self.assertEqual(set(payload[0]), {'z', 'phi_minus', 'phi_tilde', 'ratio'})

    def test_thinned_gamma_grid(self):
        target = self.path('thinned.csv')
        self.assertEqual(self.run_cli('thinned', '--x', '0', '--gamma', '0,0.5', '--output', target), 0)
        rows = read_csv(target)
        self.assertEqual(rows[0], ['x', 'v', 'log_F'])
        self.assertEqual(float(rows[1][2]), 0.0)
        self.assertAlmostEqual(float(rows[2][1]), math.log(2.0))

    def test_sao_reproducible(self):
        first, second = self.path('a.csv'), self.path('b.csv')
        for target in (first, second):
            self.assertEqual(self.run_cli('sao', '--k', '2', '--samples', '3', '--h', '0.05', '--n', '200',
                                          '--seed', '42', '--output', target), 0)
        with open(first, 'rb') as a, open(second, 'rb') as b:
            self.assertEqual(a.read(), b.read())
        self.assertEqual(len(read_csv(first)), 1 + 3 * 2)

    def test_sao_mesh_too_short(self):
        self.assertEqual(self.run_cli('sao', '--k', '50', '--output', self.path('s.csv')), 1)


class TestRunConfigPrecedence(CliTestCase):

    def write_config(self, text):
        target = self.path('run.conf')
        with open(target, 'w') as handle:
            handle.write(text)
        return target

    def test_defaults(self):
        config = resolve_run_config('tw', {'s': '0'}, {})
        self.assertEqual(config.command, Command.TW)
        self.assertEqual((config.seed, config.quad_order, config.workers), (0, 80, 1))
        self.assertTrue(config.to_stdout)
        self.assertIs(config.output_format, OutputFormat.CSV)

    def test_env_over_defaults(self):
        config = resolve_run_config('tw', {'s': '0'}, {'KPZTAIL_SEED': '5', 'KPZTAIL_QUAD_ORDER': '100'})
        self.assertEqual((config.seed, config.quad_order), (5, 100))

    def test_file_over_env(self):
        path = self.write_config("seed=7\nX-Start=3\n")
        config = resolve_run_config('painleve', {'config': path}, {'KPZTAIL_SEED': '5'})
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.get('x_start'), '3')

    def test_flags_over_file(self):
        path = self.write_config("seed=7\n")
        config = resolve_run_config('tw', {'config': path, 'seed': '9', 'verbose': False}, {'KPZTAIL_SEED': '5'})
        self.assertEqual(config.seed, 9)
        self.assertFalse(config.verbose)

    def test_invalid_values(self):
        for flags in ({'order': '4'}, {'workers': '0'}, {'seed': '-1'}, {'format': 'xml'}):
            with self.subTest(flags=flags), self.assertRaises(UsageError):
                resolve_run_config('tw', flags, {})

    def test_missing_config_file(self):
        with self.assertRaises(UsageError):
            resolve_run_config('tw', {'config': self.path('absent.conf')}, {})


class TestTableWriter(CliTestCase):

    def test_empty_rows_write_header(self):
        self.assertEqual(render_table([], OutputFormat.CSV, ['s', 'F']), b"s,F\r\n")

    def test_deterministic_bytes(self):
        rows = [{'z': -1.0, 'value': 0.1 + 0.2, 'flag': True, 'note': None}]
        first = render_table(rows, OutputFormat.CSV)
        self.assertEqual(first, render_table(rows, OutputFormat.CSV))
        self.assertEqual(first, b"z,value,flag,note\r\n-1,0.30000000000000004,true,\r\n")

    def test_json_nan_is_null(self):
        payload = orjson.loads(render_table([{'s': 1.0, 'slope': float('nan')}], OutputFormat.JSON))
        self.assertEqual(payload, [{'s': 1.0, 'slope': None}])

    def test_inhomogeneous_rows(self):
        with self.assertRaises(DomainError):
            render_table([{'a': 1}, {'b': 2}], OutputFormat.CSV)

    def test_emit_to_file(self):
        target = self.path('out.csv')
        emit_table([{'a': 1}], OutputFormat.CSV, target)
        self.assertEqual(read_csv(target), [['a'], ['1']])

    def test_emit_failure(self):
        with self.assertRaises(OutputError):
            emit_table([{'a': 1}], OutputFormat.CSV, os.path.join(self.tmp, 'no', 'such', 'file.csv'))


class TestValidationSuite(unittest.TestCase):

    def test_report_checks_do_not_gate(self):
        results = [
            ValidationCheck('a', 0.0, 1e-6, True, ASSERT),
            ValidationCheck('b', 2.0, 0.1, False, REPORT),
        ]
        self.assertTrue(asserts_passed(results))
        self.assertFalse(asserts_passed(results + [ValidationCheck('c', float('nan'), 1e-6, False, ASSERT)]))

    def test_rows(self):
        row = ValidationCheck('a', 0.5, 1.0, True, REPORT).to_row()
        self.assertEqual(list(row), ['check', 'value', 'tolerance', 'passed', 'grade'])

    @pytest.mark.slow
    def test_full_suite_asserts_pass(self):
        results = ValidationSuite(quad_order=120, mc_samples=100).run()
        self.assertEqual(len(results), 14)
        failed = [check.check for check in results if check.grade == ASSERT and not check.passed]
        self.assertEqual(failed, [])


if __name__ == '__main__':
    unittest.main()
