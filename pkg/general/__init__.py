"""
general Module - Shared Infrastructure
======================================

Infrastructure used by every kpztail package.

Components:
-----------
- Logging/: structlog + orjson structured logging on stderr
- Error/: numeric error hierarchy, exit codes, error manager
- Configuration/: environment and config-file settings
- Validation/: numeric argument checks
- Monitoring/: psutil run monitor
- Common/: grid parsing, float formatting, timers

Usage:
------
from general.Logging import get_logger
from general.Error import DomainError
from general.Configuration import get_core_config
from general.Validation import NumericValidator
"""

__version__ = "1.0.0"
