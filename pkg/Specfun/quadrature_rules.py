"""
Specfun Quadrature Rules
========================

Gauss–Legendre rules on [-1, 1] and the changes of variables that carry
them onto finite intervals, half-lines and the whole real line.
"""

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from general.Error.error_manager import DomainError, NumericError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator

logger = get_logger(__name__)

MIN_ORDER = 2
MAX_ORDER = 512
NEWTON_TOL = 1e-15
NEWTON_MAX_ITER = 100


@dataclass(frozen=True)
class Linear:
    """x = (a + b)/2 + (b - a) t / 2."""
    a: float = -1.0
    b: float = 1.0

    def __post_init__(self):
        if not self.b > self.a:
            raise DomainError("Linear transform needs a < b", {'a': self.a, 'b': self.b})

    def map(self, t: np.ndarray) -> np.ndarray:
        return 0.5 * (self.b - self.a) * t + 0.5 * (self.b + self.a)

    def jacobian(self, t: np.ndarray) -> np.ndarray:
        return np.full_like(t, 0.5 * (self.b - self.a))


@dataclass(frozen=True)
class SemiInfiniteRational:
    """x = origin + scale (1 + t)/(1 - t), onto [origin, inf)."""
    origin: float = 0.0
    scale: float = 10.0

    def __post_init__(self):
        if not self.scale > 0:
            raise DomainError("SemiInfiniteRational scale must be positive", {'scale': self.scale})

    def map(self, t: np.ndarray) -> np.ndarray:
        return self.origin + self.scale * (1.0 + t) / (1.0 - t)

    def jacobian(self, t: np.ndarray) -> np.ndarray:
        return 2.0 * self.scale / (1.0 - t) ** 2


@dataclass(frozen=True)
class RealLineTanh:
    """x = center + scale artanh(t), onto the whole line."""
    center: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if not self.scale > 0:
            raise DomainError("RealLineTanh scale must be positive", {'scale': self.scale})

    def map(self, t: np.ndarray) -> np.ndarray:
        return self.center + self.scale * np.arctanh(t)

    def jacobian(self, t: np.ndarray) -> np.ndarray:
        return self.scale / (1.0 - t * t)


Transform = Union[Linear, SemiInfiniteRational, RealLineTanh]


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss–Legendre nodes and weights on [-1, 1] plus a change of variables."""
    order: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    transform: Transform = field(default_factory=Linear)

    def with_transform(self, transform: Transform) -> 'QuadratureRule':
        return replace(self, transform=transform)

    def physical_nodes(self) -> Tuple[np.ndarray, np.ndarray]:
        """Nodes and weights after the change of variables."""
        x = self.transform.map(self.nodes)
        w = self.weights * self.transform.jacobian(self.nodes)
        return x, w

    def integrate(self, func: Callable[[np.ndarray], np.ndarray]) -> float:
        x, w = self.physical_nodes()
        return float(np.dot(w, func(x)))


@lru_cache(maxsize=64)
def _legendre_nodes(order: int) -> Tuple[np.ndarray, np.ndarray]:
    i = np.arange(1, order + 1)
    x = np.cos(np.pi * (i - 0.25) / (order + 0.5))

    def legendre(points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        p_prev = np.ones_like(points)
        p = points.copy()
        for k in range(2, order + 1):
            p_prev, p = p, ((2 * k - 1) * points * p - (k - 1) * p_prev) / k
        dp = order * (points * p - p_prev) / (points * points - 1.0)
        return p, dp

    for _ in range(NEWTON_MAX_ITER):
        p, dp = legendre(x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < NEWTON_TOL:
            break
    else:
        raise NumericError("Legendre Newton iteration did not converge", {'order': order})

    _, dp = legendre(x)
    weights = 2.0 / ((1.0 - x * x) * dp * dp)

    nodes = x[::-1]
    weights = weights[::-1]
    # exact mirror symmetry
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss–Legendre rule of the given order on [-1, 1], nodes ascending."""
    order = NumericValidator.require_int_range('order', order, MIN_ORDER, MAX_ORDER)
    nodes, weights = _legendre_nodes(order)
    return QuadratureRule(order=order, nodes=nodes, weights=weights)


def composite_rule(breakpoints: Sequence[float], nodes_per_panel: int) -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss–Legendre nodes and weights over consecutive panels."""
    edges = np.asarray(breakpoints, dtype=float)
    if edges.size < 2 or not np.all(np.diff(edges) > 0):
        raise DomainError("composite rule needs increasing breakpoints", {'panels': edges.size - 1})
    rule = gauss_legendre(nodes_per_panel)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * rule.nodes[None, :]).ravel()
    w = (half[:, None] * rule.weights[None, :]).ravel()
    return x, w
