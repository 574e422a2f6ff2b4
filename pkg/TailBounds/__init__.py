"""
TailBounds Module - Crossover of the KPZ Lower Tail
===================================================
"""

from .tail_models import TailCurve, TheoremBounds, TheoremConstants, SandwichCheck
from .crossover_service import (
    local_exponents,
    crossover_curve,
    heuristic_sum,
    minimal_k_max,
    theorem_bounds,
    crossover_location,
    empirical_crossover,
    fit_theorem_constants,
    check_sandwich,
    sandwich_points,
    FIVE_HALVES_PREFACTOR
)

__all__ = [
    'TailCurve',
    'TheoremBounds',
    'TheoremConstants',
    'SandwichCheck',
    'local_exponents',
    'crossover_curve',
    'heuristic_sum',
    'minimal_k_max',
    'theorem_bounds',
    'crossover_location',
    'empirical_crossover',
    'fit_theorem_constants',
    'check_sandwich',
    'sandwich_points',
    'FIVE_HALVES_PREFACTOR'
]
