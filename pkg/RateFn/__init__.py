"""
RateFn Module - Lower-Tail Rate Functions
=========================================
"""

from .rate_models import RatePoint, VariationalResult
from .rate_functions import (
    phi_minus,
    phi_tilde,
    conditional_density,
    conditional_cost,
    conditional_cost_exact,
    variational_objective,
    optimal_rate_level,
    variational_min,
    rate_point,
    rate_table
)

__all__ = [
    'RatePoint',
    'VariationalResult',
    'phi_minus',
    'phi_tilde',
    'conditional_density',
    'conditional_cost',
    'conditional_cost_exact',
    'variational_objective',
    'optimal_rate_level',
    'variational_min',
    'rate_point',
    'rate_table'
]
