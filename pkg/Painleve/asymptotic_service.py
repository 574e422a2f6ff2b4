"""
Painleve Asymptotic Service
===========================

Large-gap asymptotics of the Ablowitz–Segur solution and of log F(x; v):
the elliptic modulus kappa(tau), the phase speed V(tau), the leading
oscillatory term of u_AS and the three explicit terms of the
Bothner–Buckingham expansion.
"""

import math
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from general.Error.error_manager import DomainError, NumericError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator
from Specfun.barnes_functions import barnes_g_sym
from Specfun.elliptic_functions import elliptic_ke, jacobi_cd
from .painleve_models import AsymptoticRegime
from .painleve_solver import DEFAULT_REL_TOL, DEFAULT_X_START, HM_JOIN, hastings_mcleod_left, solve_painleve2

logger = get_logger(__name__)

TAU_MAX = 2.0 * math.sqrt(2.0) / 3.0
REGIME_MARGIN = 0.05
MIN_DEPTH = 15.0
COSINE_FORM_EXPONENT = -0.3
BOBU_EPSILON = 0.05


def tau_of_kappa(kappa: float) -> float:
    """tau = (2/3) sqrt(2/(1+k^2)) [E(k') - 2k^2/(1+k^2) K(k')]."""
    kappa = NumericValidator.require_range('kappa', kappa, 0.0, 1.0)
    if kappa == 0.0:
        return TAU_MAX
    prime = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    pair = elliptic_ke(prime, complement=kappa)
    k2 = kappa * kappa
    return (2.0 / 3.0) * math.sqrt(2.0 / (1.0 + k2)) * (pair.E - 2.0 * k2 / (1.0 + k2) * pair.K)


def kappa_solve(tau: float) -> float:
    """Invert the strictly decreasing map kappa -> tau on (0, 1)."""
    tau = NumericValidator.require_range('tau', tau, 0.0, TAU_MAX, low_open=True, high_open=True)
    try:
        kappa = brentq(lambda k: tau_of_kappa(k) - tau, 0.0, 1.0, xtol=1e-15, rtol=4.0 * np.finfo(float).eps, maxiter=200)
    except (RuntimeError, ValueError) as e:
        raise NumericError(f"kappa root find failed: {e}", {'tau': tau})
    return float(kappa)


def v_of_tau(tau: float) -> float:
    """V(tau) = -(2/3pi) sqrt(2/(1+k^2)) (E(k) - (1-k^2)/(1+k^2) K(k))."""
    kappa = kappa_solve(tau)
    prime = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    pair = elliptic_ke(kappa, complement=prime)
    k2 = kappa * kappa
    return -(2.0 / (3.0 * math.pi)) * math.sqrt(2.0 / (1.0 + k2)) * (pair.E - (1.0 - k2) / (1.0 + k2) * pair.K)


def asymptotic_regime(x: float, v: float) -> AsymptoticRegime:
    """Regime parameters at (x, v); rejects points outside the small-tau window."""
    x = NumericValidator.require_finite('x', x)
    v = NumericValidator.require_positive('v', v)
    if -x < MIN_DEPTH:
        raise DomainError("asymptotic form needs -x >= 15", {'x': x, 'min_depth': MIN_DEPTH})
    tau = v / (-x) ** 1.5
    if not tau < TAU_MAX - REGIME_MARGIN:
        raise DomainError(
            "tau outside the oscillatory regime",
            {'x': x, 'v': v, 'tau': tau, 'tau_limit': TAU_MAX - REGIME_MARGIN},
        )
    kappa = kappa_solve(tau)
    return AsymptoticRegime(tau=tau, kappa=kappa, V=v_of_tau(tau), x=x)


def u_as_asymptotic(x: float, v: float, form: str = "auto") -> float:
    """
    Leading oscillatory term of u_AS(x; 1 - e^-v).

    form: "elliptic" for -sqrt(-x/2) (1-k)/sqrt(1+k^2) cd(2(-x)^(3/2) V K(k~), k~),
    "cosine" for (-x)^(-1/4) sqrt(v/pi) cos(pi (-x)^(3/2) V), or "auto"
    (cosine once tau <= (-x)^(-0.3)).
    """
    if form not in ("auto", "elliptic", "cosine"):
        raise DomainError("unknown asymptotic form", {'form': form})
    regime = asymptotic_regime(x, v)
    depth = -regime.x
    if form == "cosine" or (form == "auto" and regime.tau <= depth ** COSINE_FORM_EXPONENT):
        return depth ** -0.25 * math.sqrt(v / math.pi) * math.cos(math.pi * depth ** 1.5 * regime.V)

    reduced = regime.reduced_modulus
    reduced_K = elliptic_ke(reduced).K
    amplitude = math.sqrt(depth / 2.0) * (1.0 - regime.kappa) / math.sqrt(1.0 + regime.kappa ** 2)
    return -amplitude * jacobi_cd(2.0 * depth ** 1.5 * regime.V * reduced_K, reduced)


def bobu_expansion(s: float, v: float, epsilon: Optional[float] = None) -> float:
    """-(2v/3pi) s^(3/2) + (v^2/4pi^2) log(8 s^(3/2)) + log[G(1+iv/2pi) G(1-iv/2pi)]."""
    s = NumericValidator.require_positive('s', s)
    v = NumericValidator.require_range('v', v, low=0.0)
    eps = BOBU_EPSILON if epsilon is None else epsilon
    if v > s ** (0.5 - eps):
        raise DomainError(
            "v outside the expansion window v <= s^(1/2 - eps)",
            {'s': s, 'v': v, 'limit': s ** (0.5 - eps)},
        )
    if v == 0.0:
        return 0.0
    s32 = s ** 1.5
    return (-(2.0 * v / (3.0 * math.pi)) * s32
            + (v * v / (4.0 * math.pi ** 2)) * math.log(8.0 * s32)
            + barnes_g_sym(v))


def painleve_table(gamma: float, x_grid: Sequence[float], x_start: float = DEFAULT_X_START,
                   rel_tol: float = DEFAULT_REL_TOL) -> List[Dict[str, Optional[float]]]:
    """Rows (x, u, u', u_asymptotic); u_asymptotic is None outside its regime."""
    gamma = NumericValidator.require_range('gamma', gamma, 0.0, 1.0, low_open=True)
    grid = NumericValidator.require_grid('x_grid', np.sort(np.asarray(x_grid, dtype=float)))
    if grid[-1] >= x_start:
        raise DomainError("x grid must lie left of x_start", {'x_max': float(grid[-1]), 'x_start': x_start})
    solution = solve_painleve2(gamma, float(grid[0]), x_start, rel_tol)
    u, u_prime = solution.evaluate(grid)

    v = math.inf if gamma == 1.0 else -math.log1p(-gamma)
    rows = []
    for x, ux, upx in zip(grid, u, u_prime):
        asymptotic: Optional[float] = None
        if gamma == 1.0:
            if x <= HM_JOIN:
                asymptotic = float(hastings_mcleod_left(x))
        else:
            try:
                asymptotic = u_as_asymptotic(float(x), v)
            except DomainError:
                asymptotic = None
        rows.append({'x': float(x), 'u': float(ux), 'u_prime': float(upx), 'u_asymptotic': asymptotic})
    return rows
