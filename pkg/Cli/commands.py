"""
Cli Commands
============

The ``kpztail`` command line: one subcommand per computation, each
producing a homogeneous table.

  tw         s,F
  thinned    x,v,log_F
  kpz        s,T,log_Q
  crossover  s,T,neg_log_q,local_exponent,heuristic
  sao        replicate,k,eigenvalue
  rate       z,phi_minus,phi_tilde,ratio
  painleve   x,u,u_prime,u_asymptotic
  validate   check,value,tolerance,passed,grade

Exit codes: 0 success, 1 numeric or I/O failure, 2 usage error.
"""

import argparse
import math
import sys
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import orjson

from general.Common.helpers import parse_grid
from general.Configuration.config_manager import ACCEPTANCE_QUAD_ORDER, ENV_LOG_LEVEL, SamplingConfig
from general.Error.error_manager import (
    EXIT_NUMERIC_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    KpzTailError,
    UsageError,
    exit_code_for,
    handle_error,
)
from general.Logging.logger_manager import get_logger, log_error_with_context, setup_logging
from AiryProcess.airy_process_models import SaoMesh
from AiryProcess.sao_sampler import sample_spectra
from Fredholm.determinant_service import kpz_log_laplace, thinned_log_cdf, tracy_widom_cdf
from Painleve.asymptotic_service import painleve_table
from Painleve.painleve_solver import DEFAULT_REL_TOL, DEFAULT_X_START
from RateFn.rate_functions import rate_table
from TailBounds.crossover_service import crossover_curve
from .run_config import Command, RunConfig, resolve_run_config
from .table_writer import emit_table
from .validation_suite import ValidationSuite, asserts_passed

logger = get_logger(__name__)

CommandResult = Tuple[List[Dict[str, Any]], List[str], bool]

EPILOG = __doc__.split('\n\n', 2)[2]


class KpzTailArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(message, {'prog': self.prog})


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--order', default=None, help="quadrature order (env KPZTAIL_QUAD_ORDER, default 80)")
    parser.add_argument('--seed', default=None, help="64-bit seed (env KPZTAIL_SEED, default 0)")
    parser.add_argument('--workers', default=None, help="worker threads (env KPZTAIL_WORKERS, default 1)")
    parser.add_argument('--format', default=None, choices=['csv', 'json'])
    parser.add_argument('--output', default=None, help='output path, "-" for stdout')
    parser.add_argument('--config', default=None, help="flat key=value config file")
    parser.add_argument('--verbose', action='store_true', default=None)


COMMAND_FLAGS: Dict[str, Sequence[Tuple[str, str]]] = {
    'tw': (('--s', "grid of s"),),
    'thinned': (('--x', "grid of x"), ('--v', "grid of v"), ('--gamma', "grid of gamma in [0, 1)")),
    'kpz': (('--s', "grid of s"), ('--T', "grid of T")),
    'crossover': (('--s', "increasing grid of s"), ('--T', "time T")),
    'sao': (('--k', "number of eigenvalues (default 6)"), ('--samples', "replicates (default 1)"),
            ('--h', "mesh spacing"), ('--n', "mesh points"), ('--beta', "inverse temperature")),
    'rate': (('--z', "grid of z <= 0"),),
    'painleve': (('--x', "grid of x"), ('--gamma', "gamma in (0, 1]"), ('--v', "v > 0, gamma = 1 - e^-v"),
                 ('--x-start', "right starting point"), ('--rel-tol', "relative tolerance")),
    'validate': (('--samples', "Monte Carlo replicates for the report checks (default 400)"),),
}


def build_parser() -> KpzTailArgumentParser:
    parser = KpzTailArgumentParser(prog='kpztail', description="KPZ lower-tail numerics",
                                   epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest='command', metavar='command', parser_class=KpzTailArgumentParser)
    subparsers.required = True
    for command in Command:
        sub = subparsers.add_parser(command.value, help=f"{command.value} table")
        for flag, text in COMMAND_FLAGS[command.value]:
            sub.add_argument(flag, default=None, help=text)
        _add_common(sub)
    return parser


def _text(config: RunConfig, name: str, required: bool = True) -> Optional[str]:
    value = config.get(name)
    if value is None and required:
        raise UsageError(f"{config.command.value}: --{name.replace('_', '-')} is required", {'flag': name})
    return value


def _grid(config: RunConfig, name: str) -> np.ndarray:
    return parse_grid(_text(config, name), name)


def _number(config: RunConfig, name: str, default: Optional[float] = None, cast: Callable = float):
    raw = _text(config, name, required=default is None)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"--{name.replace('_', '-')}: expected a number, got {raw!r}", {name: raw})


def _exclusive(config: RunConfig, first: str, second: str):
    if config.get(first) is not None and config.get(second) is not None:
        raise UsageError(f"--{first} and --{second} are mutually exclusive", {first: config.get(first), second: config.get(second)})


def run_tw(config: RunConfig) -> CommandResult:
    rows = [{'s': float(s), 'F': tracy_widom_cdf(float(s), config.quad_order)} for s in _grid(config, 's')]
    return rows, ['s', 'F'], True


def run_thinned(config: RunConfig) -> CommandResult:
    _exclusive(config, 'v', 'gamma')
    x_grid = _grid(config, 'x')
    if config.get('gamma') is not None:
        gammas = _grid(config, 'gamma')
        if np.any(gammas < 0.0) or np.any(gammas >= 1.0):
            raise UsageError("--gamma must lie in [0, 1)", {'gamma': config.get('gamma')})
        v_grid = -np.log1p(-gammas)
    else:
        v_grid = _grid(config, 'v')
    rows = [{'x': float(x), 'v': float(v), 'log_F': thinned_log_cdf(float(x), float(v), config.quad_order)}
            for x in x_grid for v in v_grid]
    return rows, ['x', 'v', 'log_F'], True


def run_kpz(config: RunConfig) -> CommandResult:
    s_grid, t_grid = _grid(config, 's'), _grid(config, 'T')
    rows = [{'s': float(s), 'T': float(T), 'log_Q': kpz_log_laplace(float(s), float(T), config.quad_order)}
            for T in t_grid for s in s_grid]
    return rows, ['s', 'T', 'log_Q'], True


def run_crossover(config: RunConfig) -> CommandResult:
    curve = crossover_curve(_number(config, 'T'), _grid(config, 's'), config.quad_order,
                            workers=config.workers, with_heuristic=True)
    columns = ['s', 'T', 'neg_log_q', 'local_exponent', 'heuristic']
    return [dict(zip(columns, row)) for row in curve.rows()], columns, True


def run_sao(config: RunConfig) -> CommandResult:
    mesh = SaoMesh(
        h=_number(config, 'h', SamplingConfig.h),
        n=_number(config, 'n', SamplingConfig.n, int),
        beta=_number(config, 'beta', SamplingConfig.beta),
    )
    k = _number(config, 'k', SamplingConfig.k, int)
    samples = sample_spectra(mesh, k, config.seed, _number(config, 'samples', 1, int), config.workers)
    rows = [{'replicate': sample.replicate, 'k': index + 1, 'eigenvalue': float(value)}
            for sample in samples for index, value in enumerate(sample.eigenvalues)]
    return rows, ['replicate', 'k', 'eigenvalue'], True


def run_rate(config: RunConfig) -> CommandResult:
    z_grid = _grid(config, 'z')
    if np.any(z_grid > 0.0):
        raise UsageError("--z must be <= 0", {'z': config.get('z')})
    return [point.to_row() for point in rate_table(z_grid)], ['z', 'phi_minus', 'phi_tilde', 'ratio'], True


def run_painleve(config: RunConfig) -> CommandResult:
    _exclusive(config, 'v', 'gamma')
    if config.get('v') is not None:
        gamma = -math.expm1(-_number(config, 'v'))
    else:
        gamma = _number(config, 'gamma', 1.0)
    rows = painleve_table(gamma, _grid(config, 'x'),
                          x_start=_number(config, 'x_start', DEFAULT_X_START),
                          rel_tol=_number(config, 'rel_tol', DEFAULT_REL_TOL))
    return rows, ['x', 'u', 'u_prime', 'u_asymptotic'], True


def run_validate(config: RunConfig) -> CommandResult:
    suite = ValidationSuite(quad_order=max(config.quad_order, ACCEPTANCE_QUAD_ORDER), seed=config.seed,
                            workers=config.workers, mc_samples=_number(config, 'samples', 400, int))
    results = suite.run()
    return [check.to_row() for check in results], ['check', 'value', 'tolerance', 'passed', 'grade'], asserts_passed(results)


COMMAND_HANDLERS: Dict[Command, Callable[[RunConfig], CommandResult]] = {
    Command.TW: run_tw,
    Command.THINNED: run_thinned,
    Command.KPZ: run_kpz,
    Command.CROSSOVER: run_crossover,
    Command.SAO: run_sao,
    Command.RATE: run_rate,
    Command.PAINLEVE: run_painleve,
    Command.VALIDATE: run_validate,
}


def _flags_of(namespace: argparse.Namespace) -> Dict[str, Any]:
    return {key: value for key, value in vars(namespace).items() if key != 'command'}


def parse_and_run(argv: Sequence[str], env: Optional[Mapping[str, str]] = None) -> int:
    """Run one kpztail invocation and return its exit code."""
    try:
        if not argv:
            raise UsageError("missing command", {})
        try:
            namespace = build_parser().parse_args(list(argv))
        except SystemExit as e:
            return int(e.code or 0)
        config = resolve_run_config(namespace.command, _flags_of(namespace), env)
        try:
            setup_logging(level='INFO' if config.verbose else (env or {}).get(ENV_LOG_LEVEL), force=True)
        except ValueError as e:
            raise UsageError(str(e), {'log_level': (env or {}).get(ENV_LOG_LEVEL)})

        rows, columns, passed = COMMAND_HANDLERS[config.command](config)
        emit_table(rows, config.output_format, config.output_path, columns)
        return EXIT_OK if passed else EXIT_NUMERIC_FAILURE
    except UsageError as e:
        handle_error(e)
        print(f"kpztail: error: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except KpzTailError as e:
        handle_error(e)
        log_error_with_context(e, e.context)
        sys.stderr.write(orjson.dumps(e.to_dict(), default=str, option=orjson.OPT_SERIALIZE_NUMPY).decode() + "\n")
        return exit_code_for(e)
