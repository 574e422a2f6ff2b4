"""
general Configuration Management
================================

Environment-backed configuration sections for the kpztail numerics:
- NumericsConfig: quadrature order and tolerances (KPZTAIL_QUAD_ORDER)
- SamplingConfig: Monte Carlo seed and worker count (KPZTAIL_SEED, KPZTAIL_WORKERS)
- LoggingConfig: log level (KPZTAIL_LOG_LEVEL)

Each section reads an explicit environment mapping (``os.environ`` when
none is given) so the CLI can resolve precedence against a caller-supplied
map. Flat key=value config files are parsed with python-dotenv.
"""

import os
from dataclasses import dataclass, field
from typing import Dict, Optional, Any, Mapping
from pathlib import Path

from dotenv import dotenv_values

from general.Logging.logger_manager import get_logger

logger = get_logger(__name__)

ENV_SEED = 'KPZTAIL_SEED'
ENV_QUAD_ORDER = 'KPZTAIL_QUAD_ORDER'
ENV_WORKERS = 'KPZTAIL_WORKERS'
ENV_LOG_LEVEL = 'KPZTAIL_LOG_LEVEL'

DEFAULT_QUAD_ORDER = 80
ACCEPTANCE_QUAD_ORDER = 120
MIN_QUAD_ORDER = 8
MAX_QUAD_ORDER = 400
MAX_SEED = 2 ** 64 - 1


def _env_int(env: Mapping[str, str], key: str, default: int) -> int:
    raw = env.get(key)
    if raw is None or str(raw).strip() == '':
        return default
    try:
        return int(str(raw).strip())
    except ValueError:
        raise ValueError(f"{key} must be an integer, got {raw!r}")


@dataclass
class NumericsConfig:
    """Quadrature and solver defaults."""
    quad_order: int = DEFAULT_QUAD_ORDER
    painleve_rel_tol: float = 1e-10
    painleve_x_start: float = 8.0
    source: Optional[Mapping[str, str]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        env = os.environ if self.source is None else self.source
        self.quad_order = _env_int(env, ENV_QUAD_ORDER, self.quad_order)

        if not MIN_QUAD_ORDER <= self.quad_order <= MAX_QUAD_ORDER:
            raise ValueError(
                f"{ENV_QUAD_ORDER} must be between {MIN_QUAD_ORDER} and {MAX_QUAD_ORDER}"
            )
        if not 1e-12 <= self.painleve_rel_tol <= 1e-6:
            raise ValueError("Painleve rel_tol must lie in [1e-12, 1e-6]")


@dataclass
class SamplingConfig:
    """Monte Carlo defaults for the stochastic Airy operator."""
    seed: int = 0
    workers: int = 1
    h: float = 0.02
    n: int = 1000
    beta: float = 2.0
    k: int = 6
    source: Optional[Mapping[str, str]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        env = os.environ if self.source is None else self.source
        self.seed = _env_int(env, ENV_SEED, self.seed)
        self.workers = _env_int(env, ENV_WORKERS, self.workers)

        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError(f"{ENV_SEED} must be a 64-bit unsigned integer")
        if self.workers < 1:
            raise ValueError(f"{ENV_WORKERS} must be positive")


@dataclass
class LoggingConfig:
    """Log level for the structured stderr log."""
    log_level: str = "WARNING"
    source: Optional[Mapping[str, str]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        env = os.environ if self.source is None else self.source
        self.log_level = (env.get(ENV_LOG_LEVEL) or self.log_level).upper()

        valid_log_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if self.log_level not in valid_log_levels:
            raise ValueError(f"Log level must be one of: {valid_log_levels}")


def load_config_file(path: str) -> Dict[str, str]:
    """Parse a flat key=value config file; keys are normalized to flag names."""
    config_path = Path(path)
    if not config_path.is_file():
        raise FileNotFoundError(f"Config file not found: {path}")

    values = dotenv_values(config_path)
    parsed: Dict[str, str] = {}
    for key, value in values.items():
        if value is None:
            raise ValueError(f"Config key {key!r} has no value")
        parsed[key.strip().lower().lstrip('-').replace('-', '_')] = value.strip()
    return parsed


class CoreConfigManager:
    """Holds the configuration sections resolved from one environment map."""

    def __init__(self, env: Optional[Mapping[str, str]] = None):
        self._env = env
        self.numerics = NumericsConfig(source=env)
        self.sampling = SamplingConfig(source=env)
        self.logging = LoggingConfig(source=env)

    def validate_configuration(self) -> bool:
        """Re-run section validation."""
        try:
            NumericsConfig(source=self._env)
            SamplingConfig(source=self._env)
            LoggingConfig(source=self._env)
            return True
        except ValueError as e:
            logger.error("configuration_invalid", error=str(e))
            return False

    def get_configuration_summary(self) -> Dict[str, Any]:
        return {
            'numerics': {
                'quad_order': self.numerics.quad_order,
                'painleve_rel_tol': self.numerics.painleve_rel_tol,
                'painleve_x_start': self.numerics.painleve_x_start,
            },
            'sampling': {
                'seed': self.sampling.seed,
                'workers': self.sampling.workers,
                'h': self.sampling.h,
                'n': self.sampling.n,
                'beta': self.sampling.beta,
                'k': self.sampling.k,
            },
            'logging': {'log_level': self.logging.log_level},
        }

    def reload_configuration(self, env: Optional[Mapping[str, str]] = None):
        """Reload every section, optionally against a new environment map."""
        if env is not None:
            self._env = env
        self.numerics = NumericsConfig(source=self._env)
        self.sampling = SamplingConfig(source=self._env)
        self.logging = LoggingConfig(source=self._env)
        logger.debug("configuration_reloaded")


_config_manager = None


def get_core_config() -> CoreConfigManager:
    """Get the global configuration manager."""
    global _config_manager
    if _config_manager is None:
        _config_manager = CoreConfigManager()
    return _config_manager


def reload_core_config(env: Optional[Mapping[str, str]] = None):
    """Reload the global configuration."""
    global _config_manager
    if _config_manager is not None:
        _config_manager.reload_configuration(env)
    else:
        _config_manager = CoreConfigManager(env)
