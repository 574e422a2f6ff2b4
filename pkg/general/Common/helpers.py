"""
Helper utilities shared by the kpztail packages.
Grid parsing, stable float formatting and timing.
"""

import math
import time
from typing import Optional, Dict, Any

import numpy as np

from general.Error.error_manager import UsageError
from general.Logging.logger_manager import get_logger

logger = get_logger(__name__)


def parse_grid(spec: str, name: str = "grid") -> np.ndarray:
    """Parse "a,b,c", "start:stop:count" or "start:stop:count:log" into a strictly monotone grid."""
    text = str(spec).strip()
    if not text:
        raise UsageError(f"--{name}: empty grid specification", {name: spec})

    try:
        if ':' in text:
            parts = text.split(':')
            if len(parts) not in (3, 4):
                raise ValueError("expected start:stop:count[:log]")
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
            spacing = parts[3].strip().lower() if len(parts) == 4 else 'lin'
            if count < 1:
                raise ValueError("count must be positive")
            if count > 1 and start == stop:
                raise ValueError("start and stop coincide")
            if spacing == 'log':
                if start == 0 or stop == 0 or (start > 0) != (stop > 0):
                    raise ValueError("log spacing needs nonzero endpoints of one sign")
                sign = 1.0 if start > 0 else -1.0
                grid = sign * np.geomspace(abs(start), abs(stop), count)
            elif spacing in ('lin', 'linear'):
                grid = np.linspace(start, stop, count)
            else:
                raise ValueError(f"unknown spacing {parts[3]!r}")
        else:
            grid = np.array([float(item) for item in text.split(',') if item.strip() != ''])
    except ValueError as e:
        raise UsageError(f"--{name}: malformed grid {spec!r} ({e})", {name: spec})

    if grid.size == 0 or not np.all(np.isfinite(grid)):
        raise UsageError(f"--{name}: grid must be nonempty and finite", {name: spec})
    if grid.size > 1:
        steps = np.diff(grid)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise UsageError(f"--{name}: grid must be strictly monotone", {name: spec})
    return grid


def format_float(value: Any) -> str:
    """17 significant digits; round-trips exactly through float()."""
    number = float(value)
    if math.isnan(number):
        return "nan"
    if math.isinf(number):
        return "inf" if number > 0 else "-inf"
    return format(number, '.17g')


def merge_dicts(*dicts: Optional[Dict]) -> Dict:
    """Merge dictionaries left to right; later entries win."""
    result: Dict = {}
    for d in dicts:
        if d:
            result.update(d)
    return result


class Timer:
    """Wall-clock timer context manager."""

    def __init__(self, name: str = "Timer"):
        self.name = name
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None

    def __enter__(self):
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.end_time = time.perf_counter()
        logger.debug("timer", name=self.name, seconds=round(self.elapsed, 6))

    @property
    def elapsed(self) -> float:
        """Elapsed seconds."""
        if self.start_time is None:
            return 0.0
        end = self.end_time if self.end_time is not None else time.perf_counter()
        return end - self.start_time
