"""
RateFn Rate Functions
=====================

Closed-form lower-tail rate functions of the narrow-wedge KPZ equation
and the variational family built from the conditioned Airy density.

Both closed forms are evaluated in cancellation-free arrangements:
Phi_minus as a binomial remainder of (1 + w)^(5/2), Phi_tilde as a
product with the factor (Z - 2) written as u / (Z + 2).
"""

import math
from typing import List, Sequence

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import binom

from general.Error.error_manager import NumericError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator
from Specfun.quadrature_rules import Linear, gauss_legendre
from .rate_models import RatePoint, VariationalResult

logger = get_logger(__name__)

PREFACTOR = 4.0 / (15.0 * math.pi ** 6)
SERIES_SWITCH = 0.1
SERIES_TERMS = 40
COST_RULE_ORDER = 8
MINIMIZER_XATOL = 1e-10


def _binomial_remainder(w: float) -> float:
    """(1+w)^(5/2) - 1 - (5/2) w - (15/8) w^2 for w >= 0."""
    if w < SERIES_SWITCH:
        k = np.arange(3, SERIES_TERMS)
        terms = binom(2.5, k) * w ** k
        return float(np.sum(terms[::-1]))
    return (1.0 + w) ** 2.5 - 1.0 - 2.5 * w - 1.875 * w * w


def phi_minus(z: float) -> float:
    """(4/15pi^6)(1 - pi^2 z)^(5/2) - 4/(15pi^6) + (2/3pi^4) z - (1/2pi^2) z^2."""
    z = NumericValidator.require_range('z', z, high=0.0)
    return PREFACTOR * _binomial_remainder(-math.pi ** 2 * z)


def phi_tilde(z: float) -> float:
    """
    (2/15pi^6)(40(Z-2)^3 + 2(8 - z pi^2 - 4Z)^(3/2)(-z pi^2 + 6(Z-2))), Z = sqrt(4 - z pi^2),
    which equals (4/15pi^6)(Z-2)^3 (Z^2 + 6Z + 4).
    """
    z = NumericValidator.require_range('z', z, high=0.0, high_open=True)
    u = -math.pi ** 2 * z
    Z = math.sqrt(4.0 + u)
    excess = u / (Z + 2.0)
    return PREFACTOR * excess ** 3 * (Z * Z + 6.0 * Z + 4.0)


def conditional_density(a: float, r: float) -> float:
    """
    mu*_r(a) = (r - 2a) / (2 pi sqrt(r - a)) on a < r, zero above r.

    At a = r the density is +inf for r < 0 and 0 for r = 0.
    """
    a = NumericValidator.require_finite('a', a)
    r = NumericValidator.require_range('r', r, high=0.0)
    if a > r:
        return 0.0
    if a == r:
        return math.inf if r < 0.0 else 0.0
    return (r - 2.0 * a) / (2.0 * math.pi * math.sqrt(r - a))


def conditional_cost_exact(z: float, r: float) -> float:
    """Integral of mu*_r(a)(a - z)_+ da = (1/pi)((4/15) D^(5/2) - (2r/3) D^(3/2)), D = r - z."""
    depth = r - z
    if depth <= 0.0:
        return 0.0
    return (4.0 / 15.0 * depth ** 2.5 - 2.0 * r / 3.0 * depth ** 1.5) / math.pi


def conditional_cost(z: float, r: float) -> float:
    """
    Integral of mu*_r(a)(a - z)_+ da by Gauss–Legendre.

    With a = r - u^2 the integrand becomes (2u^2 - r)(D - u^2)/pi on
    [0, sqrt(D)], a quartic the rule integrates exactly.
    """
    z = NumericValidator.require_range('z', z, high=0.0, high_open=True)
    r = NumericValidator.require_range('r', r, low=z, high=0.0)
    depth = r - z
    if depth == 0.0:
        return 0.0
    x, w = gauss_legendre(COST_RULE_ORDER).with_transform(Linear(0.0, math.sqrt(depth))).physical_nodes()
    u2 = x * x
    return float(np.dot(w, (2.0 * u2 - r) * (depth - u2))) / math.pi


def variational_objective(z: float, r: float) -> float:
    """g(r) = cost of mu*_r above z plus the (-r)^3/12 penalty."""
    return conditional_cost(z, r) + (-r) ** 3 / 12.0


def optimal_rate_level(z: float) -> float:
    """4 pi^-2 (2 - sqrt(4 - z pi^2))."""
    z = NumericValidator.require_range('z', z, high=0.0)
    return 4.0 * (2.0 - math.sqrt(4.0 - z * math.pi ** 2)) / math.pi ** 2


def variational_min(z: float) -> VariationalResult:
    """Minimize g over r in [z, 0] (bounded Brent, golden-section fallback steps)."""
    z = NumericValidator.require_range('z', z, high=0.0, high_open=True)
    result = minimize_scalar(lambda r: variational_objective(z, r), bounds=(z, 0.0),
                             method='bounded', options={'xatol': MINIMIZER_XATOL, 'maxiter': 500})
    if not result.success:
        raise NumericError("variational minimization did not converge", {'z': z, 'message': str(result.message)})
    r_star = float(result.x)
    value = variational_objective(z, r_star)
    logger.debug("variational_min", z=z, r_star=r_star, value=value)
    return VariationalResult(r_star=r_star, value=value)


def rate_point(z: float) -> RatePoint:
    z = NumericValidator.require_range('z', z, high=0.0)
    if z == 0.0:
        return RatePoint(z=0.0, phi_minus=0.0, phi_tilde=0.0, ratio=1.0)
    minus = phi_minus(z)
    tilde = phi_tilde(z)
    return RatePoint(z=z, phi_minus=minus, phi_tilde=tilde, ratio=tilde / minus)


def rate_table(z_grid: Sequence[float]) -> List[RatePoint]:
    return [rate_point(float(z)) for z in z_grid]
