"""
Painleve Models
===============

Solved Painlevé II trajectories and the small-tau asymptotic regime.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class Painleve2Solution:
    """
    u'' = x u + 2 u^3 integrated right to left from (sqrt(gamma) Ai, sqrt(gamma) Ai')
    at x_start. ``grid`` is strictly decreasing from x_start to x_min.
    """
    gamma: float
    x_start: float
    grid: np.ndarray = field(repr=False)
    u: np.ndarray = field(repr=False)
    u_prime: np.ndarray = field(repr=False)
    rel_tol: float
    abs_tol: float
    dense: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, repr=False)

    @property
    def x_min(self) -> float:
        return float(self.grid[-1])

    def evaluate(self, x) -> Tuple[np.ndarray, np.ndarray]:
        """(u, u') at arbitrary points in [x_min, x_start] from the dense output."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if self.dense is None:
            return np.zeros_like(x), np.zeros_like(x)
        values = self.dense(x)
        return values[0], values[1]


@dataclass(frozen=True)
class AsymptoticRegime:
    """tau = v/(-x)^(3/2) with the elliptic modulus kappa(tau) and phase speed V(tau)."""
    tau: float
    kappa: float
    V: float
    x: float

    @property
    def reduced_modulus(self) -> float:
        return (1.0 - self.kappa) / (1.0 + self.kappa)
