"""
AiryProcess Airy Zeros
======================

Eigenvalues lambda_n of the deterministic Airy operator -f'' + x f on
[0, inf) with Dirichlet data, i.e. the negated zeros of Ai.
"""

import math
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from general.Error.error_manager import NumericError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator
from Specfun.airy_functions import airy_ai

logger = get_logger(__name__)

MAX_INDEX = 10 ** 6
BRACKET_FRACTION = 0.3


def zero_seed(n: int) -> float:
    """Asymptotic guess t^(2/3) (1 + 5/48 t^-2 - 5/36 t^-4), t = 3pi(4n-1)/8."""
    t = 3.0 * math.pi * (4 * n - 1) / 8.0
    return t ** (2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t) - 5.0 / (36.0 * t ** 4))


def _ai_at_negative(lam: float) -> float:
    return airy_ai(-lam)[0]


@lru_cache(maxsize=2048)
def airy_eigenvalue(n: int) -> float:
    """lambda_n = -(n-th zero of Ai), to absolute accuracy 1e-10."""
    n = NumericValidator.require_int_range('n', n, 1, MAX_INDEX)
    guess = zero_seed(n)
    half_width = BRACKET_FRACTION * math.pi / math.sqrt(guess)
    low, high = guess - half_width, guess + half_width
    f_low, f_high = _ai_at_negative(low), _ai_at_negative(high)
    if f_low * f_high > 0.0:
        raise NumericError("Airy zero bracket does not change sign",
                           {'n': n, 'bracket': [low, high]})
    try:
        root = brentq(_ai_at_negative, low, high, xtol=1e-12, rtol=4.0 * np.finfo(float).eps, maxiter=200)
    except RuntimeError as e:
        raise NumericError(f"Airy zero root find failed: {e}", {'n': n})
    return float(root)


def airy_eigenvalues(count: int) -> np.ndarray:
    """lambda_1..lambda_count."""
    count = NumericValidator.require_int_range('count', count, 1, MAX_INDEX)
    return np.array([airy_eigenvalue(n) for n in range(1, count + 1)])


def zero_remainder(n: int) -> float:
    """R(n) solved from lambda_n = (3pi/2 (n - 1/4 + R(n)))^(2/3)."""
    lam = airy_eigenvalue(n)
    return 2.0 * lam ** 1.5 / (3.0 * math.pi) - n + 0.25
