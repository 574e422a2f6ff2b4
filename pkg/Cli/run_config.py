"""
Cli Run Configuration
=====================

Resolves one command invocation into a validated ``RunConfig``.

Precedence, highest first: explicit flags, the --config file, the
environment (KPZTAIL_SEED, KPZTAIL_QUAD_ORDER, KPZTAIL_WORKERS), defaults.
"""

from enum import Enum
from typing import Any, Dict, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from general.Common.helpers import merge_dicts
from general.Configuration.config_manager import (
    DEFAULT_QUAD_ORDER,
    MAX_QUAD_ORDER,
    MAX_SEED,
    MIN_QUAD_ORDER,
    CoreConfigManager,
    get_core_config,
    load_config_file,
)
from general.Error.error_manager import UsageError
from general.Logging.logger_manager import get_logger

logger = get_logger(__name__)

STDOUT = "-"
RESERVED_KEYS = ('seed', 'order', 'workers', 'format', 'output', 'config', 'verbose')


class Command(str, Enum):
    TW = "tw"
    THINNED = "thinned"
    KPZ = "kpz"
    CROSSOVER = "crossover"
    SAO = "sao"
    RATE = "rate"
    PAINLEVE = "painleve"
    VALIDATE = "validate"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    command: Command
    parameters: Dict[str, str] = Field(default_factory=dict)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    quad_order: int = Field(default=DEFAULT_QUAD_ORDER, ge=MIN_QUAD_ORDER, le=MAX_QUAD_ORDER)
    workers: int = Field(default=1, ge=1, le=256)
    output_format: OutputFormat = OutputFormat.CSV
    output_path: str = STDOUT
    verbose: bool = False

    @field_validator('output_path')
    @classmethod
    def _non_empty_path(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("output path must not be empty")
        return value

    @property
    def to_stdout(self) -> bool:
        return self.output_path == STDOUT

    def get(self, name: str, default: Optional[str] = None) -> Optional[str]:
        return self.parameters.get(name, default)


def _env_layer(env: Optional[Mapping[str, str]]) -> Dict[str, Any]:
    try:
        manager = get_core_config() if env is None else CoreConfigManager(env)
    except ValueError as e:
        raise UsageError(f"invalid environment: {e}", {})
    return {
        'seed': manager.sampling.seed,
        'order': manager.numerics.quad_order,
        'workers': manager.sampling.workers,
    }


def _file_layer(path: Optional[str]) -> Dict[str, Any]:
    if not path:
        return {}
    try:
        return load_config_file(path)
    except (OSError, ValueError) as e:
        raise UsageError(f"--config: {e}", {'config': path})


def resolve_run_config(command: str, flags: Mapping[str, Any],
                       env: Optional[Mapping[str, str]] = None) -> RunConfig:
    """
    Merge defaults, env, config file and flags (in that order) into a RunConfig.

    With env None the environment layer comes from the process-wide
    configuration singleton.
    """
    explicit = {key: value for key, value in flags.items() if value is not None and value is not False}
    merged = merge_dicts(_env_layer(env), _file_layer(explicit.get('config')), explicit)

    parameters = {key: str(value) for key, value in merged.items() if key not in RESERVED_KEYS}
    try:
        config = RunConfig(
            command=command,
            parameters=parameters,
            seed=merged.get('seed', 0),
            quad_order=merged.get('order', DEFAULT_QUAD_ORDER),
            workers=merged.get('workers', 1),
            output_format=str(merged.get('format', OutputFormat.CSV.value)).lower(),
            output_path=str(merged.get('output', STDOUT)),
            verbose=str(merged.get('verbose', False)).lower() in ('1', 'true', 'yes'),
        )
    except ValidationError as e:
        first = e.errors()[0]
        location = '.'.join(str(part) for part in first.get('loc', ()))
        raise UsageError(f"{location}: {first.get('msg')}", {'field': location})

    logger.debug("run_config_resolved", command=config.command.value, seed=config.seed,
                 quad_order=config.quad_order, parameters=config.parameters)
    return config
