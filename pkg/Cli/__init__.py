"""
Cli Module - kpztail Command Line
=================================
"""

from .run_config import Command, OutputFormat, RunConfig, resolve_run_config, STDOUT
from .table_writer import emit_table, render_table
from .validation_suite import ValidationSuite, ValidationCheck, asserts_passed, ASSERT, REPORT
from .commands import parse_and_run, build_parser, COMMAND_HANDLERS

__all__ = [
    'Command',
    'OutputFormat',
    'RunConfig',
    'resolve_run_config',
    'STDOUT',
    'emit_table',
    'render_table',
    'ValidationSuite',
    'ValidationCheck',
    'asserts_passed',
    'ASSERT',
    'REPORT',
    'parse_and_run',
    'build_parser',
    'COMMAND_HANDLERS'
]
