"""
general Error Module - Numeric Error Hierarchy
==============================================
"""

from .error_manager import (
    KpzTailError,
    DomainError,
    RangeError,
    IllConditionedError,
    ResolutionError,
    DivergenceError,
    TruncationError,
    NumericError,
    OutputError,
    UsageError,
    EXIT_OK,
    EXIT_NUMERIC_FAILURE,
    EXIT_USAGE,
    exit_code_for,
    CoreErrorManager,
    ErrorSeverity,
    ErrorInfo,
    get_error_manager,
    handle_error
)

__all__ = [
    'KpzTailError',
    'DomainError',
    'RangeError',
    'IllConditionedError',
    'ResolutionError',
    'DivergenceError',
    'TruncationError',
    'NumericError',
    'OutputError',
    'UsageError',
    'EXIT_OK',
    'EXIT_NUMERIC_FAILURE',
    'EXIT_USAGE',
    'exit_code_for',
    'CoreErrorManager',
    'ErrorSeverity',
    'ErrorInfo',
    'get_error_manager',
    'handle_error'
]
