"""
Specfun Elliptic Functions
==========================

Complete elliptic integrals by the arithmetic–geometric mean, and the
Jacobi cd function through normalized theta q-series.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from general.Error.error_manager import NumericError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator

logger = get_logger(__name__)

AGM_MAX_ITER = 64
THETA_TAIL = 1e-17


@dataclass(frozen=True)
class EllipticPair:
    """K(kappa) and E(kappa); ``divergent`` marks the logarithmic pole K(1)."""
    kappa: float
    K: float
    E: float
    divergent: bool = False


def elliptic_ke(kappa: float, complement: Optional[float] = None) -> EllipticPair:
    """
    Complete elliptic integrals of the first and second kind.

    ``complement`` may supply sqrt(1 - kappa^2) directly when kappa is
    close to one and the complementary modulus is known more accurately.
    """
    kappa = NumericValidator.require_range('kappa', kappa, 0.0, 1.0)
    if complement is None:
        complement = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    else:
        complement = NumericValidator.require_range('complement', complement, 0.0, 1.0)

    if complement == 0.0:
        return EllipticPair(kappa=kappa, K=math.inf, E=1.0, divergent=True)

    a, b = 1.0, complement
    weighted = 0.5 * kappa * kappa
    power = 0.5
    for _ in range(AGM_MAX_ITER):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        power *= 2.0
        weighted += power * c * c
        if abs(c) <= 1e-15 * a:
            break
    else:
        raise NumericError("AGM iteration did not converge", {'kappa': kappa})

    K = math.pi / (2.0 * a)
    return EllipticPair(kappa=kappa, K=K, E=K * (1.0 - weighted))


def elliptic_nome(kappa: float) -> float:
    """Nome q = exp(-pi K(kappa') / K(kappa)) for 0 < kappa < 1."""
    kappa = NumericValidator.require_range('kappa', kappa, 0.0, 1.0, high_open=True)
    if kappa == 0.0:
        return 0.0
    prime = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    K = elliptic_ke(kappa, complement=prime).K
    K_prime = elliptic_ke(prime, complement=kappa).K
    return math.exp(-math.pi * K_prime / K)


def jacobi_cd(z: float, kappa: float) -> float:
    """
    Jacobi elliptic cd(z | modulus kappa) for real z.

    cd = theta3(0) theta2(w) / (theta2(0) theta3(w)) with w = pi z / (2K);
    theta2 is normalized by its value at 0 so the q^(1/4) prefactor cancels.
    """
    z = NumericValidator.require_finite('z', z)
    kappa = NumericValidator.require_range('kappa', kappa, 0.0, 1.0, high_open=True)
    if kappa == 0.0:
        return math.cos(z)

    prime = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    K = elliptic_ke(kappa, complement=prime).K
    K_prime = elliptic_ke(prime, complement=kappa).K
    log_q = -math.pi * K_prime / K
    w = math.pi * z / (2.0 * K)

    terms = int(math.ceil(math.sqrt(-math.log(THETA_TAIL) / -log_q))) + 2
    m = np.arange(terms, dtype=float)
    theta2_weights = np.exp(log_q * m * (m + 1.0))
    theta2_ratio = np.dot(theta2_weights, np.cos((2.0 * m + 1.0) * w)) / theta2_weights.sum()

    n = m[1:]
    theta3_weights = np.exp(log_q * n * n)
    theta3_zero = 1.0 + 2.0 * theta3_weights.sum()
    theta3_w = 1.0 + 2.0 * np.dot(theta3_weights, np.cos(2.0 * n * w))
    return float(theta3_zero * theta2_ratio / theta3_w)
