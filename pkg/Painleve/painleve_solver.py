"""
Painleve Solver
===============

Ablowitz–Segur solutions u'' = x u + 2 u^3 with u ~ sqrt(gamma) Ai(x) as
x -> +inf, integrated right to left with DOP853 from x_start.

gamma = 1 (Hastings–McLeod) is a separatrix: the leftward initial-value
problem loses it near x = -8. Left of a join point the solution is
continued by a collocation boundary-value solve anchored to the
x -> -inf expansion u ~ sqrt(-x/2)(1 + 1/(8x^3) - 73/(128x^6) + ...).
"""

import math
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.integrate import solve_bvp, solve_ivp

from general.Error.error_manager import DivergenceError, DomainError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator
from Specfun.airy_functions import airy_ai
from Specfun.quadrature_rules import composite_rule
from .painleve_models import Painleve2Solution

logger = get_logger(__name__)

DEFAULT_X_START = 8.0
DEFAULT_REL_TOL = 1e-10
GRID_SPACING = 0.02
HM_JOIN = -4.0
HM_BVP_MARGIN = 4.0
HM_BVP_LEFT_MAX = -12.0
HM_BVP_TOL = 1e-9
HM_BVP_MAX_NODES = 200_000
INTEGRAL_PANEL = 0.25
INTEGRAL_NODES = 10


def _painleve_rhs(x, y):
    return [y[1], x * y[0] + 2.0 * y[0] ** 3]


def _painleve_rhs_mesh(x, y):
    return np.vstack((y[1], x * y[0] + 2.0 * y[0] ** 3))


def hastings_mcleod_left(x) -> np.ndarray:
    """x -> -inf expansion of the Hastings–McLeod solution."""
    x = np.asarray(x, dtype=float)
    inv3 = x ** -3
    return np.sqrt(-x / 2.0) * (1.0 + inv3 / 8.0 - 73.0 / 128.0 * inv3 ** 2 + 10657.0 / 1024.0 * inv3 ** 3)


def _continue_hastings_mcleod(x_min: float, u_join: float):
    x_left = min(x_min - HM_BVP_MARGIN, HM_BVP_LEFT_MAX)
    mesh = np.linspace(x_left, HM_JOIN, 600)
    guess_u = hastings_mcleod_left(mesh)
    guess_u += (u_join - guess_u[-1]) * (mesh - x_left) / (HM_JOIN - x_left)
    guess = np.vstack((guess_u, np.gradient(guess_u, mesh)))
    u_left = float(hastings_mcleod_left(x_left))

    def boundary(ya, yb):
        return np.array([ya[0] - u_left, yb[0] - u_join])

    result = solve_bvp(_painleve_rhs_mesh, boundary, mesh, guess,
                       tol=HM_BVP_TOL, max_nodes=HM_BVP_MAX_NODES)
    if not result.success:
        raise DivergenceError(
            f"Hastings–McLeod continuation failed: {result.message}",
            {'gamma': 1.0, 'x_left': x_left, 'x_join': HM_JOIN},
        )
    logger.debug("hastings_mcleod_bvp", x_left=x_left, nodes=int(result.x.size),
                  max_residual=float(np.max(result.rms_residuals)))
    return result.sol


@lru_cache(maxsize=256)
def _solve(gamma: float, x_min: float, x_start: float, rel_tol: float) -> Painleve2Solution:
    count = int(math.ceil((x_start - x_min) / GRID_SPACING)) + 1
    grid = np.linspace(x_start, x_min, count)

    if gamma == 0.0:
        zeros = np.zeros_like(grid)
        for array in (grid, zeros):
            array.setflags(write=False)
        return Painleve2Solution(gamma, x_start, grid, zeros, zeros, rel_tol, 0.0)

    ai, aip = airy_ai(x_start)
    root = math.sqrt(gamma)
    y0 = np.array([root * ai, root * aip])
    abs_tol = 1e-2 * rel_tol * abs(y0[0])

    hastings_mcleod = gamma == 1.0 and x_min < HM_JOIN
    x_end = HM_JOIN if hastings_mcleod else x_min
    ivp = solve_ivp(_painleve_rhs, (x_start, x_end), y0, method='DOP853',
                    rtol=rel_tol, atol=abs_tol, dense_output=True)
    if ivp.status != 0 or not np.all(np.isfinite(ivp.y)):
        raise DivergenceError(
            f"Painleve II integration failed: {ivp.message}",
            {'gamma': gamma, 'failure_x': float(ivp.t[-1]), 'rel_tol': rel_tol},
        )

    left = _continue_hastings_mcleod(x_min, float(ivp.sol(HM_JOIN)[0])) if hastings_mcleod else None

    def dense(x: np.ndarray) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        values = np.empty((2, x.size))
        right = x >= x_end
        if np.any(right):
            values[:, right] = ivp.sol(x[right])
        if np.any(~right):
            values[:, ~right] = left(x[~right])
        return values

    values = dense(grid)
    u, u_prime = values[0], values[1]
    u[0], u_prime[0] = y0
    for array in (grid, u, u_prime):
        array.setflags(write=False)
    return Painleve2Solution(gamma, x_start, grid, u, u_prime, rel_tol, abs_tol, dense)


def solve_painleve2(gamma: float, x_min: float, x_start: float = DEFAULT_X_START,
                    rel_tol: float = DEFAULT_REL_TOL) -> Painleve2Solution:
    """Ablowitz–Segur (gamma < 1) or Hastings–McLeod (gamma = 1) solution on [x_min, x_start]."""
    gamma = NumericValidator.require_finite('gamma', gamma)
    if gamma > 1.0:
        raise DomainError("gamma > 1 gives pole-field solutions (blow-up regime)", {'gamma': gamma})
    gamma = NumericValidator.require_range('gamma', gamma, 0.0, 1.0)
    x_start = NumericValidator.require_range('x_start', x_start, 6.0, 12.0)
    x_min = NumericValidator.require_range('x_min', x_min, -60.0, x_start, high_open=True)
    rel_tol = NumericValidator.require_range('rel_tol', rel_tol, 1e-12, 1e-6)
    return _solve(gamma, x_min, x_start, rel_tol)


def ode_residual(solution: Painleve2Solution, points, step: float = 0.01) -> np.ndarray:
    """u'' - x u - 2u^3 with u'' from a fourth-order difference of the dense u'."""
    x = np.asarray(points, dtype=float)
    _, d_plus2 = solution.evaluate(x + 2 * step)
    _, d_plus = solution.evaluate(x + step)
    _, d_minus = solution.evaluate(x - step)
    _, d_minus2 = solution.evaluate(x - 2 * step)
    second = (-d_plus2 + 8.0 * d_plus - 8.0 * d_minus + d_minus2) / (12.0 * step)
    u, _ = solution.evaluate(x)
    return second - x * u - 2.0 * u ** 3


def log_f_from_solution(solution: Painleve2Solution, x: float) -> float:
    """
    -integral over [x, inf) of (y - x) u(y)^2 dy.

    Composite Gauss–Legendre over [x, x_start] on the dense output, plus the
    exact tail gamma * integral of (y - x) Ai(y)^2 beyond x_start.
    """
    if solution.gamma == 0.0:
        return 0.0
    x_start = solution.x_start
    if not solution.x_min <= x < x_start:
        raise DomainError("x outside the solved interval", {'x': x, 'x_min': solution.x_min, 'x_start': x_start})

    panels = max(int(math.ceil((x_start - x) / INTEGRAL_PANEL)), 1)
    y, w = composite_rule(np.linspace(x, x_start, panels + 1), INTEGRAL_NODES)
    u, _ = solution.evaluate(y)
    body = float(np.dot(w, (y - x) * u * u))

    ai, aip = airy_ai(x_start)
    int_ai2 = aip * aip - x_start * ai * ai
    int_y_ai2 = -(x_start * x_start * ai * ai - x_start * aip * aip + ai * aip) / 3.0
    tail = solution.gamma * (int_y_ai2 - x * int_ai2)
    return -(body + tail)


def f_via_integral(x: float, v: float, rel_tol: float = DEFAULT_REL_TOL,
                   x_start: float = DEFAULT_X_START) -> float:
    """log F(x; v) from the Ablowitz–Segur solution with gamma = 1 - e^-v."""
    x = NumericValidator.require_range('x', x, -40.0, 6.0)
    v = NumericValidator.require_range('v', v, 0.0, 30.0)
    if v == 0.0:
        return 0.0
    gamma = -math.expm1(-v)
    return log_f_from_solution(solve_painleve2(gamma, x, x_start, rel_tol), x)


def tracy_widom_log_cdf_painleve(s: float, rel_tol: float = DEFAULT_REL_TOL,
                                 x_start: Optional[float] = None) -> float:
    """log F_GUE(s) from the Hastings–McLeod solution."""
    s = NumericValidator.require_range('s', s, -12.0, 6.0)
    solution = solve_painleve2(1.0, s, x_start or DEFAULT_X_START, rel_tol)
    return log_f_from_solution(solution, s)
