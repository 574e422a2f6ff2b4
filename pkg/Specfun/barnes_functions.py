"""
Specfun Barnes G
================

log G(1 + z) by its Taylor series with zeta-value coefficients, valid in
the unit disc, and the symmetric combination
log[G(1 + iv/2pi) G(1 - iv/2pi)] for 0 <= v < 2pi.
"""

import math

import numpy as np
from scipy.special import zeta

from general.Error.error_manager import RangeError
from general.Validation.input_validation import NumericValidator

EULER_GAMMA = 0.57721566490153286061
SERIES_TOL = 1e-17
MAX_TERMS = 200_000


def _term_count(radius: float) -> int:
    if radius == 0.0:
        return 2
    count = int(math.ceil(math.log(SERIES_TOL) / math.log(radius))) + 2
    return min(max(count, 2), MAX_TERMS)


def log_barnes_g(z: complex) -> complex:
    """log G(1 + z) for |z| < 1."""
    z = complex(z)
    radius = abs(z)
    if not radius < 1.0:
        raise RangeError(
            "log G(1+z) series needs |z| < 1",
            {'z': str(z), 'abs_z': radius, 'radius_of_convergence': 1.0},
        )
    k = np.arange(3, _term_count(radius) + 3)
    coefficients = (-1.0) ** (k - 1) * zeta(k - 1.0) / k
    series = np.sum(coefficients * z ** k) if radius > 0 else 0.0
    return (z * (math.log(2.0 * math.pi) - 1.0) / 2.0
            - (1.0 + EULER_GAMMA) * z * z / 2.0
            + complex(series))


def barnes_g_sym(v: float) -> float:
    """g2(v) = log[G(1 + iv/2pi) G(1 - iv/2pi)], real by conjugate symmetry."""
    v = NumericValidator.require_range('v', v, low=0.0)
    y = v / (2.0 * math.pi)
    if not y < 1.0:
        raise RangeError(
            "barnes_g_sym needs v < 2*pi (series radius of convergence)",
            {'v': v, 'limit': 2.0 * math.pi},
        )
    if y == 0.0:
        return 0.0
    j = np.arange(2, _term_count(y * y) + 2)
    terms = (-1.0) ** (j + 1) * zeta(2.0 * j - 1.0) * y ** (2 * j) / j
    return float((1.0 + EULER_GAMMA) * y * y + np.sum(terms[::-1]))
