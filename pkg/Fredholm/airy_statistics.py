"""
Fredholm Airy Statistics
========================

Exact statistics of the Airy point process read off the discretized
kernel: the Tracy–Widom mean, counting moments and law of
chi([-s, inf)), and trace/Jensen bounds on -log Q(s; T).
"""

import math
from typing import Dict, Tuple

import numpy as np
from scipy.special import expit, ndtr

from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator
from Specfun.airy_functions import airy_ai
from Specfun.quadrature_rules import RealLineTanh, gauss_legendre
from .determinant_service import (
    DEFAULT_ORDER,
    _airy_spectrum,
    airy_kernel_diagonal,
    airy_order_floor,
    fermi_nodes,
    log_fredholm_det,
)
from .kernel_models import KernelSpec

logger = get_logger(__name__)

TW_MEAN_GUESS = -1.77
TW_MEAN_SCALE = 2.0
TW_SUPPORT = (-12.0, 10.0)


def tracy_widom_mean(quadrature_order: int = 64, order: int = DEFAULT_ORDER) -> float:
    """
    E[a_1] under F_GUE.

    Uses E_F - E_G = integral of (G - F) against a Gaussian reference CDF G
    with known mean, integrated on a RealLineTanh rule so the integrand is
    smooth and decays on both sides.
    """
    rule = gauss_legendre(quadrature_order).with_transform(RealLineTanh(TW_MEAN_GUESS, TW_MEAN_SCALE))
    a, w = rule.physical_nodes()
    cdf = np.empty_like(a)
    low, high = TW_SUPPORT
    for i, point in enumerate(a):
        if point < low:
            cdf[i] = 0.0
        elif point > high:
            cdf[i] = 1.0
        else:
            cdf[i] = math.exp(log_fredholm_det(KernelSpec.airy(point), order).log_det)
    reference = ndtr(a - TW_MEAN_GUESS)
    return TW_MEAN_GUESS + float(np.dot(w, reference - cdf))


def kernel_spectrum(s: float, order: int = DEFAULT_ORDER) -> np.ndarray:
    """Eigenvalues of K^Ai on [-s, inf): the Bernoulli parameters of chi([-s, inf))."""
    s = NumericValidator.require_range('s', s, -10.0, 60.0)
    used = max(order, airy_order_floor(-s))
    return np.clip(_airy_spectrum(-s, 1.0, used), 0.0, 1.0)


def counting_mean_exact(s: float) -> float:
    """
    E chi([-s, inf)) = integral of K^Ai(x, x) over [-s, inf), in closed form:
    (2/3) x^2 Ai^2 - (2/3) x Ai'^2 - (1/3) Ai Ai' at x = -s.
    """
    x = -NumericValidator.require_finite('s', s)
    ai, aip = airy_ai(x)
    return (2.0 / 3.0) * x * x * ai * ai - (2.0 / 3.0) * x * aip * aip - ai * aip / 3.0


def counting_moments_exact(s: float, order: int = DEFAULT_ORDER) -> Tuple[float, float]:
    """Mean (closed form) and variance (sum of lambda (1 - lambda)) of chi([-s, inf))."""
    eigenvalues = kernel_spectrum(s, order)
    return counting_mean_exact(s), float(np.sum(eigenvalues * (1.0 - eigenvalues)))


def counting_distribution(s: float, n_max: int, order: int = DEFAULT_ORDER) -> np.ndarray:
    """P(chi([-s, inf)) = n) for n = 0..n_max, as a Poisson–binomial law of the kernel spectrum."""
    n_max = NumericValidator.require_int_range('n_max', n_max, 0)
    probabilities = np.zeros(n_max + 1)
    probabilities[0] = 1.0
    for lam in kernel_spectrum(s, order):
        shifted = np.zeros_like(probabilities)
        shifted[1:] = probabilities[:-1]
        probabilities = (1.0 - lam) * probabilities + lam * shifted
    return probabilities


def jensen_bounds(s: float, T: float, order: int = DEFAULT_ORDER) -> Dict[str, float]:
    """
    Bounds bracketing -log Q(s; T):
    trace(sigma K) <= -log Q <= integral of log(1 + e^{t(s+a)}) K(a, a) da.
    """
    s = NumericValidator.require_finite('s', s)
    T = NumericValidator.require_range('T', T, 1e-2, 1e8)
    kernel = KernelSpec.fermi(s, T)
    a, w = fermi_nodes(kernel, order)
    t = T ** (1.0 / 3.0)
    density = airy_kernel_diagonal(a)
    argument = t * (s + a)
    lower = float(np.dot(w, expit(argument) * density))
    upper = float(np.dot(w, np.logaddexp(0.0, argument) * density))
    return {'lower': lower, 'upper': upper}
