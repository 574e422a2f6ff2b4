"""
Painleve Module - Painlevé II and Large-Gap Asymptotics
=======================================================
"""

from .painleve_models import Painleve2Solution, AsymptoticRegime
from .painleve_solver import (
    solve_painleve2,
    f_via_integral,
    log_f_from_solution,
    tracy_widom_log_cdf_painleve,
    hastings_mcleod_left,
    ode_residual,
    DEFAULT_X_START,
    DEFAULT_REL_TOL
)
from .asymptotic_service import (
    tau_of_kappa,
    kappa_solve,
    v_of_tau,
    asymptotic_regime,
    u_as_asymptotic,
    bobu_expansion,
    painleve_table,
    TAU_MAX
)

__all__ = [
    'Painleve2Solution',
    'AsymptoticRegime',
    'solve_painleve2',
    'f_via_integral',
    'log_f_from_solution',
    'tracy_widom_log_cdf_painleve',
    'hastings_mcleod_left',
    'ode_residual',
    'DEFAULT_X_START',
    'DEFAULT_REL_TOL',
    'tau_of_kappa',
    'kappa_solve',
    'v_of_tau',
    'asymptotic_regime',
    'u_as_asymptotic',
    'bobu_expansion',
    'painleve_table',
    'TAU_MAX'
]
