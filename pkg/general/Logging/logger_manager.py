"""
general Logger Management
=========================

Structured logging for the kpztail numerics:
- structlog front end, JSON lines rendered through orjson
- stderr only (stdout carries result tables)
- computation events and errors with parameter context
"""

import logging
import os
import sys
from datetime import datetime, timezone
from typing import Dict, Any, Optional

import orjson
import structlog

LOG_LEVEL_ENV = "KPZTAIL_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"

_configured = False


def _orjson_dumps(payload: Dict[str, Any], default=None) -> str:
    """Serialize a log event; numpy scalars are passed through OPT_SERIALIZE_NUMPY."""
    return orjson.dumps(
        payload,
        default=default if default is not None else str,
        option=orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_NON_STR_KEYS,
    ).decode()


def setup_logging(level: Optional[str] = None, force: bool = False):
    """Set up structured logging on stderr."""
    global _configured
    if _configured and not force:
        return

    level_name = (level or os.getenv(LOG_LEVEL_ENV) or DEFAULT_LOG_LEVEL).upper()
    numeric_level = getattr(logging, level_name, None)
    if not isinstance(numeric_level, int):
        raise ValueError(f"Unknown log level: {level_name}")

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.addHandler(handler)
    root_logger.setLevel(numeric_level)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(serializer=_orjson_dumps),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )
    _configured = True


def get_logger(name: str):
    """Get a structlog logger bound to a module name."""
    setup_logging()
    return structlog.get_logger(name)


def log_computation_event(event: str, details: Optional[Dict[str, Any]] = None, level: str = "info"):
    """Log a numeric event (order raised, refinement discrepancy, sampling progress)."""
    logger = get_logger('computation')
    log_method = getattr(logger, level, logger.info)
    log_method(event, **(details or {}))


def log_error_with_context(error: Exception, context: Dict[str, Any]):
    """Log errors with additional context information."""
    logger = get_logger('error_logger')

    logger.error(
        "error_with_context",
        timestamp=datetime.now(timezone.utc).isoformat(),
        error_type=type(error).__name__,
        error_message=str(error),
        context=context,
    )
