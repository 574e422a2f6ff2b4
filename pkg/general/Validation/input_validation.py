"""
general Input Validation Module
===============================

Argument checks shared by the numeric packages. Every check raises
``DomainError`` carrying the parameter name and the offending value.
"""

import math
from typing import Any, Optional, Sequence

import numpy as np

from general.Error.error_manager import DomainError


class NumericValidator:
    """Numeric argument validation utilities."""

    @staticmethod
    def require_finite(name: str, value: Any) -> float:
        """Return ``value`` as a float, rejecting NaN and infinities."""
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise DomainError(f"{name} must be a real number", {name: repr(value)})
        if not math.isfinite(number):
            raise DomainError(f"{name} must be finite", {name: repr(number)})
        return number

    @staticmethod
    def require_range(name: str, value: Any, low: Optional[float] = None,
                      high: Optional[float] = None, low_open: bool = False,
                      high_open: bool = False) -> float:
        """Check ``low <= value <= high`` (strict on open ends)."""
        number = NumericValidator.require_finite(name, value)
        below = low is not None and (number <= low if low_open else number < low)
        above = high is not None and (number >= high if high_open else number > high)
        if below or above:
            left = '(' if low_open else '['
            right = ')' if high_open else ']'
            interval = f"{left}{'-inf' if low is None else low}, {'inf' if high is None else high}{right}"
            raise DomainError(
                f"{name}={number} outside {interval}",
                {name: number, 'allowed': interval},
            )
        return number

    @staticmethod
    def require_positive(name: str, value: Any) -> float:
        return NumericValidator.require_range(name, value, low=0.0, low_open=True)

    @staticmethod
    def require_int_range(name: str, value: Any, low: int, high: Optional[int] = None) -> int:
        try:
            is_integral = not isinstance(value, bool) and int(value) == value
        except (TypeError, ValueError):
            is_integral = False
        if not is_integral:
            raise DomainError(f"{name} must be an integer", {name: repr(value)})
        number = int(value)
        if number < low or (high is not None and number > high):
            raise DomainError(
                f"{name}={number} outside [{low}, {high if high is not None else 'inf'}]",
                {name: number},
            )
        return number

    @staticmethod
    def require_grid(name: str, values: Sequence[float]) -> np.ndarray:
        """Nonempty, finite and strictly increasing grid."""
        grid = np.asarray(values, dtype=float)
        if grid.ndim != 1 or grid.size == 0:
            raise DomainError(f"{name} must be a nonempty one-dimensional grid", {name: np.ravel(grid).tolist()})
        if not np.all(np.isfinite(grid)):
            raise DomainError(f"{name} contains non-finite values", {name: grid.tolist()})
        if grid.size > 1 and not np.all(np.diff(grid) > 0):
            raise DomainError(f"{name} must be strictly increasing", {name: grid.tolist()})
        return grid
