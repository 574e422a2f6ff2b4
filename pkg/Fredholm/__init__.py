"""
Fredholm Module - Airy-Kernel Determinants
==========================================

Log Fredholm determinants for F_GUE, the thinned CDF F(x; v) and the KPZ
Laplace transform Q(s; T), plus exact Airy-process statistics.
"""

from .kernel_models import KernelVariant, KernelSpec, LogDeterminantResult
from .determinant_service import (
    airy_kernel_matrix,
    airy_kernel_diagonal,
    log_det_on_nodes,
    log_fredholm_det,
    tracy_widom_log_cdf,
    tracy_widom_cdf,
    thinned_log_cdf,
    kpz_log_laplace,
    estimated_neg_log_q,
    DEFAULT_ORDER,
    MAX_TRUSTED_NEG_LOG
)
from .airy_statistics import (
    tracy_widom_mean,
    kernel_spectrum,
    counting_mean_exact,
    counting_moments_exact,
    counting_distribution,
    jensen_bounds
)

__all__ = [
    'KernelVariant',
    'KernelSpec',
    'LogDeterminantResult',
    'airy_kernel_matrix',
    'airy_kernel_diagonal',
    'log_det_on_nodes',
    'log_fredholm_det',
    'tracy_widom_log_cdf',
    'tracy_widom_cdf',
    'thinned_log_cdf',
    'kpz_log_laplace',
    'estimated_neg_log_q',
    'DEFAULT_ORDER',
    'MAX_TRUSTED_NEG_LOG',
    'tracy_widom_mean',
    'kernel_spectrum',
    'counting_mean_exact',
    'counting_moments_exact',
    'counting_distribution',
    'jensen_bounds'
]
