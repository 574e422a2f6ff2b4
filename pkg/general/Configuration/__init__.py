"""
general Configuration Module - Environment and Config Files
===========================================================
"""

from .config_manager import (
    CoreConfigManager,
    NumericsConfig,
    SamplingConfig,
    LoggingConfig,
    load_config_file,
    get_core_config,
    reload_core_config,
    ENV_SEED,
    ENV_QUAD_ORDER,
    ENV_WORKERS,
    ENV_LOG_LEVEL,
    DEFAULT_QUAD_ORDER,
    ACCEPTANCE_QUAD_ORDER,
    MIN_QUAD_ORDER,
    MAX_QUAD_ORDER,
    MAX_SEED
)

__all__ = [
    'CoreConfigManager',
    'NumericsConfig',
    'SamplingConfig',
    'LoggingConfig',
    'load_config_file',
    'get_core_config',
    'reload_core_config',
    'ENV_SEED',
    'ENV_QUAD_ORDER',
    'ENV_WORKERS',
    'ENV_LOG_LEVEL',
    'DEFAULT_QUAD_ORDER',
    'ACCEPTANCE_QUAD_ORDER',
    'MIN_QUAD_ORDER',
    'MAX_QUAD_ORDER',
    'MAX_SEED'
]
