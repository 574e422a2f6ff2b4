"""
Specfun Airy Functions
======================

Ai(x) and Ai'(x) for real x.

- |x| <= 3: Maclaurin series in double precision
- 3 < |x| <= 9: the same series summed with mpmath at 40 digits
  (the alternating terms reach ~1e8 at |x| = 9)
- |x| > 9: asymptotic expansions, exponential for x > 0 and oscillatory
  for x < 0, truncated at the smallest term
"""

import math
from functools import lru_cache
from typing import Tuple

import mpmath
import numpy as np

from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator

logger = get_logger(__name__)

AIRY_CUTOFF = 9.0
DOUBLE_SERIES_LIMIT = 3.0
SERIES_TERMS = 60
ASYMPTOTIC_TERMS = 40
MP_DIGITS = 40

AI0 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
AIP0 = 1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))


def _asymptotic_coefficients(count: int) -> Tuple[np.ndarray, np.ndarray]:
    u = np.empty(count)
    v = np.empty(count)
    u[0] = v[0] = 1.0
    for k in range(1, count):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        v[k] = -(6 * k + 1) / (6 * k - 1) * u[k]
    return u, v


_U, _V = _asymptotic_coefficients(ASYMPTOTIC_TERMS)


def _series_double(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    x3 = x ** 3
    t = np.ones_like(x)
    s = x.copy()
    p = 0.5 * x * x
    q = np.ones_like(x)
    f, g, fp, gp = t.copy(), s.copy(), p.copy(), q.copy()
    for k in range(1, SERIES_TERMS):
        t = t * x3 / ((3 * k - 1) * (3 * k))
        s = s * x3 / ((3 * k) * (3 * k + 1))
        q = q * x3 / ((3 * k - 2) * (3 * k))
        f += t
        g += s
        gp += q
        if k >= 2:
            p = p * x3 / ((3 * k - 3) * (3 * k - 1))
            fp += p
    return AI0 * f - AIP0 * g, AI0 * fp - AIP0 * gp


@lru_cache(maxsize=8192)
def _series_mp(x: float) -> Tuple[float, float]:
    with mpmath.workdps(MP_DIGITS):
        X = mpmath.mpf(x)
        x3 = X ** 3
        t = mpmath.mpf(1)
        s = X
        p = X * X / 2
        q = mpmath.mpf(1)
        f, g, fp, gp = t, s, p, q
        for k in range(1, SERIES_TERMS):
            t = t * x3 / ((3 * k - 1) * (3 * k))
            s = s * x3 / ((3 * k) * (3 * k + 1))
            q = q * x3 / ((3 * k - 2) * (3 * k))
            f += t
            g += s
            gp += q
            if k >= 2:
                p = p * x3 / ((3 * k - 3) * (3 * k - 1))
                fp += p
        c1 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3))
        c2 = 1 / (mpmath.cbrt(3) * mpmath.gamma(mpmath.mpf(1) / 3))
        return float(c1 * f - c2 * g), float(c1 * fp - c2 * gp)


def airy_series(x) -> Tuple[np.ndarray, np.ndarray]:
    """Maclaurin-series branch; exact-arithmetic summation beyond |x| = 3."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    small = np.abs(x) <= DOUBLE_SERIES_LIMIT
    if np.any(small):
        ai[small], aip[small] = _series_double(x[small])
    for idx in np.flatnonzero(~small):
        ai[idx], aip[idx] = _series_mp(float(x[idx]))
    return ai, aip


def _truncated_sum(coeffs: np.ndarray, powers: np.ndarray) -> np.ndarray:
    """Sum coeffs[k] * powers[:, k] up to (excluding) the smallest term per row."""
    terms = coeffs[None, :] * powers
    magnitude = np.abs(terms)
    # keep terms while they shrink; stop at the first growth
    growing = np.diff(magnitude, axis=1) > 0
    first_growth = np.where(growing.any(axis=1), growing.argmax(axis=1) + 1, terms.shape[1])
    mask = np.arange(terms.shape[1])[None, :] < first_growth[:, None]
    return np.sum(np.where(mask, terms, 0.0), axis=1)


def airy_asymptotic(x) -> Tuple[np.ndarray, np.ndarray]:
    """Asymptotic branch for |x| large (accurate to ~1e-15 relative beyond |x| = 9)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    k = np.arange(ASYMPTOTIC_TERMS)
    sign = (-1.0) ** k

    pos = x > 0
    if np.any(pos):
        z = x[pos]
        zeta = (2.0 / 3.0) * z ** 1.5
        powers = sign[None, :] * zeta[:, None] ** (-k[None, :].astype(float))
        su = _truncated_sum(_U, powers)
        sv = _truncated_sum(_V, powers)
        damp = np.exp(-zeta) / (2.0 * np.sqrt(np.pi))
        ai[pos] = damp * z ** -0.25 * su
        aip[pos] = -damp * z ** 0.25 * sv

    neg = ~pos
    if np.any(neg):
        z = -x[neg]
        zeta = (2.0 / 3.0) * z ** 1.5
        half = ASYMPTOTIC_TERMS // 2
        j = np.arange(half)
        alt = (-1.0) ** j
        even_pow = alt[None, :] * zeta[:, None] ** (-2.0 * j[None, :])
        odd_pow = alt[None, :] * zeta[:, None] ** (-2.0 * j[None, :] - 1.0)
        u_even = _truncated_sum(_U[0::2][:half], even_pow)
        u_odd = _truncated_sum(_U[1::2][:half], odd_pow)
        v_even = _truncated_sum(_V[0::2][:half], even_pow)
        v_odd = _truncated_sum(_V[1::2][:half], odd_pow)
        phase = zeta - 0.25 * np.pi
        c, s = np.cos(phase), np.sin(phase)
        ai[neg] = z ** -0.25 / np.sqrt(np.pi) * (c * u_even + s * u_odd)
        aip[neg] = z ** 0.25 / np.sqrt(np.pi) * (s * v_even - c * v_odd)
    return ai, aip


def airy_ai_array(x) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized Ai and Ai' for finite real input."""
    x = np.asarray(x, dtype=float)
    shape = x.shape
    flat = np.atleast_1d(x).ravel()
    if not np.all(np.isfinite(flat)):
        NumericValidator.require_finite('x', flat[~np.isfinite(flat)][0])
    ai = np.empty_like(flat)
    aip = np.empty_like(flat)
    inner = np.abs(flat) <= AIRY_CUTOFF
    if np.any(inner):
        ai[inner], aip[inner] = airy_series(flat[inner])
    if np.any(~inner):
        ai[~inner], aip[~inner] = airy_asymptotic(flat[~inner])
    return ai.reshape(shape), aip.reshape(shape)


@lru_cache(maxsize=4096)
def airy_ai(x: float) -> Tuple[float, float]:
    """Return (Ai(x), Ai'(x))."""
    x = NumericValidator.require_finite('x', x)
    ai, aip = airy_ai_array(np.array([x]))
    return float(ai[0]), float(aip[0])
