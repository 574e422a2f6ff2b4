"""
TailBounds Data Models
======================
"""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class TailCurve:
    """-log Q(s; T) on a grid plus centered log-log slopes (length len(s_grid) - 2)."""
    T: float
    s_grid: np.ndarray
    neg_log_q: np.ndarray
    local_exponent: np.ndarray
    heuristic: np.ndarray = field(default_factory=lambda: np.empty(0))

    def rows(self) -> List[Tuple[float, float, float, float, float]]:
        """One row per grid point; the slope is NaN at both ends."""
        slopes = np.full(self.s_grid.size, np.nan)
        if self.local_exponent.size:
            slopes[1:-1] = self.local_exponent
        heuristic = self.heuristic if self.heuristic.size else np.full(self.s_grid.size, np.nan)
        return [
            (float(s), self.T, float(q), float(slope), float(h))
            for s, q, slope, h in zip(self.s_grid, self.neg_log_q, slopes, heuristic)
        ]


@dataclass(frozen=True)
class TheoremBounds:
    upper: float
    lower: float
    upper_terms: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    lower_terms: Tuple[float, float] = (0.0, 0.0)


@dataclass(frozen=True)
class TheoremConstants:
    C: float
    K1: float
    K2: float


@dataclass(frozen=True)
class SandwichCheck:
    s: float
    T: float
    lower: float
    q: float
    upper: float

    @property
    def passed(self) -> bool:
        return self.lower <= self.q <= self.upper
