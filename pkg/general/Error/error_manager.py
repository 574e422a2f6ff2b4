"""
general Error Handling Module
=============================

Numeric error hierarchy and the error manager used by the CLI.

Every error carries a ``context`` dict with the offending parameters; the
CLI serializes it on failure and maps the error kind to an exit code.
"""

import traceback
from enum import Enum
from typing import Dict, Any, Optional, Callable, List
from datetime import datetime, timedelta, timezone
from dataclasses import dataclass, field

from general.Logging.logger_manager import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NUMERIC_FAILURE = 1
EXIT_USAGE = 2


class KpzTailError(Exception):
    """Base class for every kpztail failure."""

    kind = "numeric"

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context: Dict[str, Any] = dict(context or {})

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'error_type': type(self).__name__,
            'message': self.message,
            'context': self.context,
        }


class DomainError(KpzTailError):
    """Parameter outside the domain of an operation, or a regime violation."""
    kind = "domain"


class RangeError(DomainError):
    """Argument outside the convergence range of a series."""
    kind = "range"


class IllConditionedError(KpzTailError):
    """Discretized kernel has an eigenvalue above one."""
    kind = "ill_conditioned"


class ResolutionError(KpzTailError):
    """Quadrature does not resolve a feature of the integrand."""
    kind = "resolution"


class DivergenceError(KpzTailError):
    """ODE integration failed (step-size collapse or blow-up)."""
    kind = "divergence"


class TruncationError(KpzTailError):
    """A finite truncation (mesh length, k_max) is too small."""
    kind = "truncation"


class NumericError(KpzTailError):
    """Eigensolver or root finder did not converge."""
    kind = "numeric"


class OutputError(KpzTailError):
    """Result table could not be written."""
    kind = "io"


class UsageError(KpzTailError):
    """Bad command line: unknown command, malformed grid, conflicting flags."""
    kind = "usage"


def exit_code_for(error: BaseException) -> int:
    """Map an error to the process exit code."""
    if isinstance(error, UsageError):
        return EXIT_USAGE
    return EXIT_NUMERIC_FAILURE


class ErrorSeverity(Enum):
    """Error severity levels."""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


@dataclass
class ErrorInfo:
    """Error information structure."""
    error_type: str
    message: str
    severity: ErrorSeverity
    kind: str = "internal"
    timestamp: datetime = field(default_factory=lambda: datetime.now(timezone.utc))
    context: Dict[str, Any] = field(default_factory=dict)
    stack_trace: Optional[str] = None
    exit_code: int = EXIT_NUMERIC_FAILURE


class CoreErrorManager:
    """Records handled errors and dispatches registered handlers."""

    def __init__(self):
        self.error_history: List[ErrorInfo] = []
        self.error_handlers: Dict[str, Callable] = {}
        self.max_history_size = 1000

    def register_error_handler(self, error_type: str, handler: Callable):
        """Register a custom error handler for a specific error type."""
        self.error_handlers[error_type] = handler
        logger.debug("registered_error_handler", error_type=error_type)

    def _severity_for(self, error: BaseException) -> ErrorSeverity:
        if isinstance(error, UsageError):
            return ErrorSeverity.LOW
        if isinstance(error, (DomainError, TruncationError)):
            return ErrorSeverity.MEDIUM
        if isinstance(error, KpzTailError):
            return ErrorSeverity.HIGH
        return ErrorSeverity.CRITICAL

    def _create_error_info(self, error: BaseException, severity: ErrorSeverity,
                           context: Optional[Dict[str, Any]] = None) -> ErrorInfo:
        merged = dict(getattr(error, 'context', {}) or {})
        merged.update(context or {})
        return ErrorInfo(
            error_type=type(error).__name__,
            message=str(error),
            severity=severity,
            kind=getattr(error, 'kind', 'internal'),
            context=merged,
            stack_trace=traceback.format_exc() if severity == ErrorSeverity.CRITICAL else None,
            exit_code=exit_code_for(error),
        )

    def _add_to_history(self, error_info: ErrorInfo):
        self.error_history.append(error_info)
        if len(self.error_history) > self.max_history_size:
            self.error_history = self.error_history[-self.max_history_size:]

    def handle_error(self, error: BaseException, context: Optional[Dict[str, Any]] = None,
                     severity: Optional[ErrorSeverity] = None) -> ErrorInfo:
        """Record an error, log it at a level matching its severity, run its handler."""
        severity = severity or self._severity_for(error)
        error_info = self._create_error_info(error, severity, context)

        log_level = {
            ErrorSeverity.LOW: logger.info,
            ErrorSeverity.MEDIUM: logger.warning,
            ErrorSeverity.HIGH: logger.error,
            ErrorSeverity.CRITICAL: logger.critical,
        }[severity]
        log_level("error_handled", error_type=error_info.error_type,
                  kind=error_info.kind, message=error_info.message,
                  context=error_info.context)

        self._add_to_history(error_info)

        handler = self.error_handlers.get(error_info.error_type)
        if handler is not None:
            try:
                handler(error, error_info.context)
            except Exception as handler_error:
                logger.error("error_handler_failed", error=str(handler_error))

        return error_info

    def get_error_statistics(self, hours: int = 24) -> Dict[str, Any]:
        """Get error statistics for the last N hours."""
        cutoff = datetime.now(timezone.utc) - timedelta(hours=hours)
        recent_errors = [e for e in self.error_history if e.timestamp >= cutoff]

        stats: Dict[str, Any] = {
            'total_errors': len(recent_errors),
            'by_severity': {s.value: 0 for s in ErrorSeverity},
            'by_kind': {},
            'error_types': {},
        }
        for error in recent_errors:
            stats['by_severity'][error.severity.value] += 1
            stats['by_kind'][error.kind] = stats['by_kind'].get(error.kind, 0) + 1
            stats['error_types'][error.error_type] = stats['error_types'].get(error.error_type, 0) + 1
        return stats

    def clear(self):
        self.error_history.clear()


_error_manager = None


def get_error_manager() -> CoreErrorManager:
    """Get the global error manager."""
    global _error_manager
    if _error_manager is None:
        _error_manager = CoreErrorManager()
    return _error_manager


def handle_error(error: BaseException, context: Optional[Dict[str, Any]] = None) -> ErrorInfo:
    """Handle an error through the global manager."""
    return get_error_manager().handle_error(error, context)
