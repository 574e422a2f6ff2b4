"""
Specfun Module - Special Functions and Quadrature
=================================================

Airy functions, complete elliptic integrals, Jacobi cd, Barnes G and
Gauss–Legendre rules used by every numeric package.
"""

from .airy_functions import airy_ai, airy_ai_array, airy_series, airy_asymptotic, AIRY_CUTOFF
from .elliptic_functions import EllipticPair, elliptic_ke, elliptic_nome, jacobi_cd
from .barnes_functions import barnes_g_sym, log_barnes_g
from .quadrature_rules import (
    QuadratureRule,
    Linear,
    SemiInfiniteRational,
    RealLineTanh,
    gauss_legendre,
    composite_rule
)

__all__ = [
    'airy_ai',
    'airy_ai_array',
    'airy_series',
    'airy_asymptotic',
    'AIRY_CUTOFF',
    'EllipticPair',
    'elliptic_ke',
    'elliptic_nome',
    'jacobi_cd',
    'barnes_g_sym',
    'log_barnes_g',
    'QuadratureRule',
    'Linear',
    'SemiInfiniteRational',
    'RealLineTanh',
    'gauss_legendre',
    'composite_rule'
]
