"""
AiryProcess Data Models
=======================

Meshes, spectrum samples and summary records for the discretized
stochastic Airy operator.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from general.Error.error_manager import DomainError

MAX_SPACING = 0.05


@dataclass(frozen=True)
class SaoMesh:
    """Uniform grid x_i = i*h, i = 1..n, for the stochastic Airy operator at inverse temperature beta."""
    h: float = 0.02
    n: int = 1000
    beta: float = 2.0

    def __post_init__(self):
        if not (math.isfinite(self.h) and 0.0 < self.h <= MAX_SPACING):
            raise DomainError("mesh spacing must lie in (0, 0.05]", {'h': self.h})
        if int(self.n) != self.n or self.n < 2:
            raise DomainError("mesh needs at least two points", {'n': self.n})
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise DomainError("beta must be positive", {'beta': self.beta})

    @property
    def length(self) -> float:
        return self.n * self.h

    @property
    def max_resolved_eigenvalue(self) -> float:
        """Largest eigenvalue the domain length supports (n*h >= 2*lambda)."""
        return self.length / 2.0

    def points(self) -> np.ndarray:
        return self.h * np.arange(1, self.n + 1, dtype=float)

    def to_dict(self) -> Dict[str, float]:
        return {'h': self.h, 'n': self.n, 'beta': self.beta}


@dataclass(frozen=True, eq=False)
class SpectrumSample:
    mesh: SaoMesh
    eigenvalues: np.ndarray
    seed: int
    k: int
    replicate: int = 0

    def __post_init__(self):
        if self.eigenvalues.shape != (self.k,):
            raise DomainError("sample must hold exactly k eigenvalues",
                              {'k': self.k, 'found': int(self.eigenvalues.size)})
        if self.k > 1 and not np.all(np.diff(self.eigenvalues) > 0):
            raise DomainError("sample eigenvalues must be strictly increasing", {'seed': self.seed})

    @property
    def airy_points(self) -> np.ndarray:
        """a_k = -Lambda_k."""
        return -self.eigenvalues


@dataclass(frozen=True)
class CountingStats:
    s: float
    n_samples: int
    mean: float
    variance: float
    mean_ci_halfwidth: float

    def __post_init__(self):
        if self.mean < 0.0 or self.variance < 0.0:
            raise DomainError("counting moments must be nonnegative",
                              {'mean': self.mean, 'variance': self.variance})


@dataclass(frozen=True)
class RigidityBounds:
    """Right-hand sides of the three rigidity estimates."""
    short_scale: float
    counting_window: float
    eigenvalue_sandwich: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return self.short_scale, self.counting_window, self.eigenvalue_sandwich


@dataclass(frozen=True)
class SandwichEstimate:
    """Empirical sandwich constant; truncated marks that only the sampled k were seen."""
    value: float
    epsilon: float
    k: int
    truncated: bool = True
    argmax: int = field(default=0)
