"""Tests for the shared infrastructure: grids, formatting, config, errors, validation."""

import os
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from general.Common.helpers import Timer, format_float, merge_dicts, parse_grid
from general.Configuration.config_manager import (
    ENV_QUAD_ORDER,
    ENV_SEED,
    CoreConfigManager,
    NumericsConfig,
    SamplingConfig,
    get_core_config,
    load_config_file,
    reload_core_config,
)
from general.Error.error_manager import (
    EXIT_NUMERIC_FAILURE,
    EXIT_USAGE,
    CoreErrorManager,
    DomainError,
    ErrorSeverity,
    OutputError,
    RangeError,
    TruncationError,
    UsageError,
    exit_code_for,
)
from general.Monitoring.performance_monitor import PerformanceMonitor
from general.Validation.input_validation import NumericValidator


class TestParseGrid(unittest.TestCase):

    def test_comma_list(self):
        assert_array_equal(parse_grid("1,2,3.5"), [1.0, 2.0, 3.5])

    def test_linear_triple(self):
        grid = parse_grid("-10:-0.05:500")
        self.assertEqual(grid.size, 500)
        self.assertEqual(grid[0], -10.0)
        self.assertEqual(grid[-1], -0.05)

    def test_log_spacing_keeps_sign(self):
        grid = parse_grid("-10:-0.1:3:log")
        assert_allclose(grid, [-10.0, -1.0, -0.1])

    def test_descending_grid_is_monotone(self):
        assert_array_equal(parse_grid("3,2,1"), [3.0, 2.0, 1.0])

    def test_malformed_grids_are_usage_errors(self):
        for spec in ("", "a,b", "1:2", "1:2:0", "1,1,2", "1,3,2", "0:1:5:log", "1:2:3:cubic", "1,nan"):
            with self.subTest(spec=spec):
                with self.assertRaises(UsageError):
                    parse_grid(spec, "s")


class TestFormatting(unittest.TestCase):

    def test_round_trip_at_17_digits(self):
        for value in (0.1, 1.0 / 3.0, 2.3381074104597670, -1e-300, 1e22):
            self.assertEqual(float(format_float(value)), value)

    def test_non_finite(self):
        self.assertEqual(format_float(float('nan')), "nan")
        self.assertEqual(format_float(float('-inf')), "-inf")

    def test_merge_dicts_later_wins(self):
        self.assertEqual(merge_dicts({'a': 1, 'b': 1}, None, {'b': 2}), {'a': 1, 'b': 2})

    def test_timer_measures(self):
        with Timer("probe") as timer:
            sum(range(1000))
        self.assertGreaterEqual(timer.elapsed, 0.0)


class TestConfiguration(unittest.TestCase):

    def test_defaults_from_empty_environment(self):
        manager = CoreConfigManager({})
        self.assertEqual(manager.numerics.quad_order, 80)
        self.assertEqual(manager.sampling.seed, 0)
        self.assertEqual(manager.sampling.k, 6)
        self.assertTrue(manager.validate_configuration())

    def test_environment_overrides(self):
        manager = CoreConfigManager({ENV_SEED: "17", ENV_QUAD_ORDER: "120"})
        self.assertEqual(manager.sampling.seed, 17)
        self.assertEqual(manager.numerics.quad_order, 120)

    def test_bad_environment_values(self):
        with self.assertRaises(ValueError):
            NumericsConfig(source={ENV_QUAD_ORDER: "4"})
        with self.assertRaises(ValueError):
            SamplingConfig(source={ENV_SEED: "-1"})
        with self.assertRaises(ValueError):
            SamplingConfig(source={ENV_SEED: "seven"})

    def test_reload_against_new_environment(self):
        manager = CoreConfigManager({})
        manager.reload_configuration({ENV_SEED: "5"})
        self.assertEqual(manager.get_configuration_summary()['sampling']['seed'], 5)

    def test_global_manager_follows_reload(self):
        reload_core_config({ENV_SEED: "3"})
        try:
            self.assertEqual(get_core_config().sampling.seed, 3)
        finally:
            reload_core_config({})

    def test_config_file_keys_are_normalized(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "run.cfg")
            with open(path, "w") as handle:
                handle.write("seed=3\nX-Start = 7\n")
            self.assertEqual(load_config_file(path), {'seed': '3', 'x_start': '7'})

    def test_missing_config_file(self):
        with self.assertRaises(FileNotFoundError):
            load_config_file("/nonexistent/kpztail.cfg")


class TestErrors(unittest.TestCase):

    def test_exit_codes(self):
        self.assertEqual(exit_code_for(UsageError("bad flag")), EXIT_USAGE)
        self.assertEqual(exit_code_for(DomainError("bad s")), EXIT_NUMERIC_FAILURE)
        self.assertEqual(exit_code_for(OutputError("disk full")), EXIT_NUMERIC_FAILURE)

    def test_range_error_is_a_domain_error(self):
        error = RangeError("outside disk", {'z': 2.0})
        self.assertIsInstance(error, DomainError)
        self.assertEqual(error.to_dict()['context'], {'z': 2.0})
        self.assertEqual(error.to_dict()['kind'], "range")

    def test_manager_statistics(self):
        manager = CoreErrorManager()
        manager.handle_error(UsageError("one"))
        manager.handle_error(TruncationError("two", {'k': 50}))
        info = manager.handle_error(DomainError("three"), {'operation': 'probe'})
        self.assertEqual(info.severity, ErrorSeverity.MEDIUM)
        self.assertEqual(info.context, {'operation': 'probe'})
        stats = manager.get_error_statistics()
        self.assertEqual(stats['total_errors'], 3)
        self.assertEqual(stats['by_kind'], {'usage': 1, 'truncation': 1, 'domain': 1})

    def test_registered_handler_runs(self):
        manager = CoreErrorManager()
        seen = []
        manager.register_error_handler('DomainError', lambda error, context: seen.append(context))
        manager.handle_error(DomainError("x", {'s': 1.0}))
        self.assertEqual(seen, [{'s': 1.0}])


class TestNumericValidator(unittest.TestCase):

    def test_range_bounds(self):
        self.assertEqual(NumericValidator.require_range('x', 1.0, 0.0, 1.0), 1.0)
        with self.assertRaises(DomainError):
            NumericValidator.require_range('x', 1.0, 0.0, 1.0, high_open=True)
        with self.assertRaises(DomainError):
            NumericValidator.require_finite('x', float('inf'))

    def test_int_range(self):
        self.assertEqual(NumericValidator.require_int_range('n', 3.0, 1, 5), 3)
        for bad in (0, 2.5, True, "three"):
            with self.subTest(value=bad):
                with self.assertRaises(DomainError):
                    NumericValidator.require_int_range('n', bad, 1, 5)

    def test_grid(self):
        assert_array_equal(NumericValidator.require_grid('g', [1, 2, 3]), [1.0, 2.0, 3.0])
        with self.assertRaises(DomainError):
            NumericValidator.require_grid('g', [2, 1])


class TestPerformanceMonitor(unittest.TestCase):

    def test_stages_and_summary(self):
        monitor = PerformanceMonitor()
        monitor.start()
        monitor.track_stage_start("probe")
        np.linalg.eigvalsh(np.eye(50))
        monitor.track_stage_stop("probe")
        monitor.stop()
        summary = monitor.get_system_summary()
        self.assertEqual(summary['status'], 'stopped')
        self.assertGreater(summary['peak_memory_mb'], 0.0)
        self.assertEqual(monitor.get_stage_stats()['probe']['status'], 'done')


if __name__ == '__main__':
    unittest.main()
