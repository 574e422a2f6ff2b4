"""
TailBounds Crossover Service
============================

Crossover of -log Q(s; T) from the T^(1/3) s^(5/2) law to the s^3 law:
pointwise Fredholm evaluation on a grid, local log-log exponents, the
deterministic sum over Airy-operator eigenvalues, and the two-sided
tail bounds with caller-supplied constants.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from general.Error.error_manager import DomainError, NumericError, TruncationError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator
from AiryProcess.airy_zeros import MAX_INDEX, airy_eigenvalue
from Fredholm.determinant_service import (
    DEFAULT_ORDER,
    MAX_TRUSTED_NEG_LOG,
    estimated_neg_log_q,
    kpz_log_laplace,
)
from .tail_models import SandwichCheck, TailCurve, TheoremBounds, TheoremConstants

logger = get_logger(__name__)

FIVE_HALVES_PREFACTOR = 4.0 / (15.0 * math.pi)
TAIL_MARGIN = 40.0
CROSSOVER_SLOPE = 2.75
CONSTANT_GRID = tuple(np.round(np.geomspace(0.1, 10.0, 41), 12))


def local_exponents(s: Sequence[float], values: Sequence[float]) -> np.ndarray:
    """Centered slopes of log(values) against log(s) at the interior points."""
    s = NumericValidator.require_grid('s', s)
    values = np.asarray(values, dtype=float)
    if values.shape != s.shape:
        raise DomainError("values must match the grid", {'grid': s.size, 'values': values.size})
    if s.size < 3:
        return np.empty(0)
    if np.any(s <= 0.0) or np.any(values <= 0.0):
        raise DomainError("log-log slopes need positive s and values", {'s_min': float(s.min())})
    log_s, log_v = np.log(s), np.log(values)
    return (log_v[2:] - log_v[:-2]) / (log_s[2:] - log_s[:-2])


def _check_trust(T: float, s_grid: np.ndarray):
    offending = [float(s) for s in s_grid if estimated_neg_log_q(float(s), T) > MAX_TRUSTED_NEG_LOG]
    if offending:
        raise DomainError("-log Q beyond double-precision trust at some grid points",
                          {'T': T, 'offending_s': offending, 'limit': MAX_TRUSTED_NEG_LOG})


def crossover_curve(T: float, s_grid: Sequence[float], order: int = DEFAULT_ORDER,
                    workers: int = 1, with_heuristic: bool = False) -> TailCurve:
    """-log Q(s; T) on the grid and its local exponents."""
    T = NumericValidator.require_range('T', T, 1e-2, 1e8)
    grid = NumericValidator.require_grid('s_grid', s_grid)
    workers = NumericValidator.require_int_range('workers', workers, 1, 256)
    _check_trust(T, grid)

    def evaluate(s: float) -> float:
        return -kpz_log_laplace(float(s), T, order)

    if workers == 1:
        neg_log_q = np.array([evaluate(s) for s in grid])
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            neg_log_q = np.array(list(executor.map(evaluate, grid)))
    neg_log_q = np.maximum(neg_log_q, 0.0)

    if grid.size > 1 and np.any(np.diff(neg_log_q) < -1e-10 * np.maximum(1.0, neg_log_q[1:])):
        logger.warning("neg_log_q_not_monotone", T=T)

    if grid.size >= 3 and np.all(grid > 0.0) and np.all(neg_log_q > 0.0):
        exponents = local_exponents(grid, neg_log_q)
    else:
        exponents = np.full(max(grid.size - 2, 0), np.nan)

    heuristic = np.array([heuristic_sum(float(s), T) for s in grid]) if with_heuristic else np.empty(0)
    return TailCurve(T=T, s_grid=grid, neg_log_q=neg_log_q, local_exponent=exponents, heuristic=heuristic)


def required_level(s: float, T: float) -> float:
    """lambda_{k_max} must reach s + 40/T^(1/3) for the dropped terms to vanish in double precision."""
    return s + TAIL_MARGIN / T ** (1.0 / 3.0)


def minimal_k_max(s: float, T: float) -> int:
    """Smallest k with lambda_k >= required_level(s, T)."""
    level = required_level(s, T)
    if level <= 0.0:
        return 1
    k = max(1, int(2.0 * level ** 1.5 / (3.0 * math.pi)))
    while k > 1 and airy_eigenvalue(k - 1) >= level:
        k -= 1
    while airy_eigenvalue(k) < level:
        k += 1
        if k > MAX_INDEX:
            raise TruncationError("required k_max exceeds the eigenvalue table", {'s': s, 'T': T})
    return k


def heuristic_sum(s: float, T: float, k_max: Optional[int] = None) -> float:
    """S(s, T) = sum_{k <= k_max} log(1 + exp(T^(1/3)(s - lambda_k))), summed from the smallest term."""
    s = NumericValidator.require_finite('s', s)
    T = NumericValidator.require_positive('T', T)
    if k_max is None:
        k_max = minimal_k_max(s, T)
    k_max = NumericValidator.require_int_range('k_max', k_max, 1, MAX_INDEX)
    level = required_level(s, T)
    if airy_eigenvalue(k_max) < level:
        raise TruncationError(
            "k_max too small for the tail of the eigenvalue sum",
            {'s': s, 'T': T, 'k_max': k_max, 'required_lambda': level,
             'required_k_max': minimal_k_max(s, T)},
        )
    t = T ** (1.0 / 3.0)
    lam = np.array([airy_eigenvalue(k) for k in range(1, k_max + 1)])
    terms = np.logaddexp(0.0, t * (s - lam))
    return math.fsum(np.sort(terms))


def theorem_bounds(s: float, T: float, epsilon: float, delta: float,
                   C: float, K1: float, K2: float) -> TheoremBounds:
    """Two-sided bounds on the lower tail with existential constants supplied by the caller."""
    s = NumericValidator.require_positive('s', s)
    T = NumericValidator.require_positive('T', T)
    epsilon = NumericValidator.require_range('epsilon', epsilon, 0.0, 1.0 / 3.0, low_open=True, high_open=True)
    delta = NumericValidator.require_range('delta', delta, 0.0, 1.0 / 3.0, low_open=True, high_open=True)
    C = NumericValidator.require_positive('C', C)
    K1 = NumericValidator.require_positive('K1', K1)
    K2 = NumericValidator.require_positive('K2', K2)

    t = T ** (1.0 / 3.0)
    five_halves = FIVE_HALVES_PREFACTOR * t * s ** 2.5
    upper_terms = (
        math.exp(-(1.0 - C * epsilon) * five_halves),
        math.exp(-K1 * s ** (3.0 - delta) - epsilon * t * s),
        math.exp(-(1.0 - C * epsilon) / 12.0 * s ** 3),
    )
    lower_terms = (
        math.exp(-(1.0 + C * epsilon) * five_halves),
        math.exp(-K2 * s ** 3),
    )
    return TheoremBounds(upper=math.fsum(upper_terms), lower=math.fsum(lower_terms),
                         upper_terms=upper_terms, lower_terms=lower_terms)


def crossover_location(T: float) -> float:
    """s* = (16 T^(1/3) / (5 pi))^2, where the s^(5/2) and s^3 exponent models meet."""
    T = NumericValidator.require_positive('T', T)
    return (16.0 * T ** (1.0 / 3.0) / (5.0 * math.pi)) ** 2


def empirical_crossover(curve: TailCurve, slope: float = CROSSOVER_SLOPE) -> Optional[float]:
    """First interior s where the local exponent passes through slope, by linear interpolation."""
    s_mid = curve.s_grid[1:-1]
    exponents = curve.local_exponent
    for i in range(len(exponents) - 1):
        a, b = exponents[i], exponents[i + 1]
        if np.isfinite(a) and np.isfinite(b) and (a - slope) * (b - slope) <= 0.0 and a != b:
            return float(s_mid[i] + (slope - a) * (s_mid[i + 1] - s_mid[i]) / (b - a))
    return None


def _holds(points: Iterable[Tuple[float, float, float]], epsilon: float, delta: float,
           C: float, K1: float, K2: float, side: str) -> bool:
    for s, T, neg_log_q in points:
        bounds = theorem_bounds(s, T, epsilon, delta, C, K1, K2)
        q = math.exp(-neg_log_q)
        if side == 'upper' and q > bounds.upper:
            return False
        if side == 'lower' and q < bounds.lower:
            return False
    return True


def fit_theorem_constants(points: Sequence[Tuple[float, float, float]], epsilon: float, delta: float,
                          grid: Sequence[float] = CONSTANT_GRID) -> TheoremConstants:
    """
    Fit (C, K1, K2) on (s, T, -log Q) points: the smallest C and K2 and
    the largest K1 on the grid for which lower <= Q <= upper at every point.
    """
    if not points:
        raise DomainError("no points to fit constants on", {})
    grid = sorted(float(g) for g in grid)
    for C in grid:
        if not _holds(points, epsilon, delta, C, grid[0], grid[-1], 'upper'):
            continue
        if not _holds(points, epsilon, delta, C, grid[0], grid[-1], 'lower'):
            continue
        K1 = max(k for k in grid if _holds(points, epsilon, delta, C, k, grid[-1], 'upper'))
        K2 = min(k for k in grid if _holds(points, epsilon, delta, C, K1, k, 'lower'))
        constants = TheoremConstants(C=C, K1=K1, K2=K2)
        logger.info("theorem_constants_fitted", C=C, K1=K1, K2=K2, points=len(points))
        return constants
    raise NumericError("no constants on the grid bracket Q at the fit points",
                       {'epsilon': epsilon, 'delta': delta, 'grid_max': grid[-1]})


def check_sandwich(points: Sequence[Tuple[float, float, float]], constants: TheoremConstants,
                   epsilon: float, delta: float) -> List[SandwichCheck]:
    """Re-check frozen constants on a separate set of points."""
    checks = []
    for s, T, neg_log_q in points:
        bounds = theorem_bounds(s, T, epsilon, delta, constants.C, constants.K1, constants.K2)
        checks.append(SandwichCheck(s=s, T=T, lower=bounds.lower, q=math.exp(-neg_log_q), upper=bounds.upper))
    return checks


def sandwich_points(T: float, s_values: Sequence[float], order: int = DEFAULT_ORDER) -> List[Tuple[float, float, float]]:
    """(s, T, -log Q) triples from the Fredholm determinant."""
    return [(float(s), T, -kpz_log_laplace(float(s), T, order)) for s in s_values]
