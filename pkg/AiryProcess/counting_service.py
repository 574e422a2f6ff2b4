"""
AiryProcess Counting Service
============================

Counting statistics of the Airy point process, rigidity-bound
evaluators and the empirical eigenvalue sandwich constant.

Monte Carlo moments come from the stochastic Airy operator; the
exponential-Markov and exact deficit probabilities come from the Fredholm
side (thinned determinant and Poisson-binomial counting law).
"""

import math
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from general.Error.error_manager import DomainError
from general.Logging.logger_manager import get_logger
from general.Validation.input_validation import NumericValidator
from Fredholm.airy_statistics import counting_distribution, counting_mean_exact
from Fredholm.determinant_service import DEFAULT_ORDER, thinned_log_cdf
from .airy_process_models import CountingStats, RigidityBounds, SandwichEstimate, SaoMesh, SpectrumSample
from .airy_zeros import airy_eigenvalues
from .sao_sampler import sample_counts

logger = get_logger(__name__)

MIN_SAMPLES = 100
COUNTING_S_RANGE = (0.5, 8.0)
Z_95 = 1.959963984540054
MARKOV_V_MAX = 30.0


def counting_mean_leading(s: float) -> float:
    """2/(3pi) s^(3/2)."""
    return 2.0 / (3.0 * math.pi) * s ** 1.5


def counting_variance_leading(s: float) -> float:
    """11/(12pi^2) log s."""
    return 11.0 / (12.0 * math.pi ** 2) * math.log(s)


def counting_statistics(s: float, n_samples: int, mesh: Optional[SaoMesh] = None,
                        seed: int = 0, workers: int = 1) -> CountingStats:
    """Monte Carlo mean and variance of chi([-s, inf)) = #{k : Lambda_k <= s}."""
    s = NumericValidator.require_range('s', s, *COUNTING_S_RANGE)
    n_samples = NumericValidator.require_int_range('n_samples', n_samples, MIN_SAMPLES)
    mesh = mesh or SaoMesh()

    counts = sample_counts(mesh, s, seed, n_samples, workers).astype(float)
    mean = float(np.mean(counts))
    variance = float(np.var(counts, ddof=1))
    stats = CountingStats(
        s=s,
        n_samples=n_samples,
        mean=mean,
        variance=variance,
        mean_ci_halfwidth=Z_95 * math.sqrt(variance / n_samples),
    )
    logger.debug("counting_statistics", s=s, n_samples=n_samples, mean=mean, variance=variance)
    return stats


def rigidity_bounds(s: float, c: float, delta: float, epsilon: float,
                    K: float = 1.0, kappa: float = 1.0) -> RigidityBounds:
    """
    Evaluate the three rigidity right-hand sides:
    exp(-c s^(3-d) (1 - K s^(-4d/15))),
    exp(-c s^(3/2) (log(c s^(3/2)) - (1+e) log log s)),
    kappa exp(-kappa s^(1-d)).
    """
    s = NumericValidator.require_positive('s', s)
    c = NumericValidator.require_positive('c', c)
    delta = NumericValidator.require_range('delta', delta, 0.0, 1.0, low_open=True, high_open=True)
    epsilon = NumericValidator.require_range('epsilon', epsilon, 0.0, 1.0, low_open=True, high_open=True)
    K = NumericValidator.require_finite('K', K)
    kappa = NumericValidator.require_positive('kappa', kappa)
    if s <= 1.0:
        raise DomainError("log log s is undefined for s <= 1", {'s': s})

    short_scale = math.exp(-c * s ** (3.0 - delta) * (1.0 - K * s ** (-4.0 * delta / 15.0)))
    scale = c * s ** 1.5
    counting_window = math.exp(-scale * (math.log(scale) - (1.0 + epsilon) * math.log(math.log(s))))
    sandwich = kappa * math.exp(-kappa * s ** (1.0 - delta))
    return RigidityBounds(short_scale=short_scale, counting_window=counting_window,
                          eigenvalue_sandwich=sandwich)


def sandwich_estimate(sample: SpectrumSample, epsilon: float) -> SandwichEstimate:
    """max_k max((1-e) lambda_k - Lambda_k, Lambda_k - (1+e) lambda_k, 0) over the sampled k."""
    epsilon = NumericValidator.require_range('epsilon', epsilon, 0.0, 1.0, high_open=True)
    if sample.k < 1:
        raise DomainError("sample is empty", {'k': sample.k})
    lam = airy_eigenvalues(sample.k)
    observed = sample.eigenvalues
    gaps = np.maximum(np.maximum((1.0 - epsilon) * lam - observed, observed - (1.0 + epsilon) * lam), 0.0)
    worst = int(np.argmax(gaps))
    return SandwichEstimate(value=float(gaps[worst]), epsilon=epsilon, k=sample.k,
                            truncated=True, argmax=worst + 1)


def sandwich_constant(sample: SpectrumSample, epsilon: float) -> float:
    """Empirical C^Ai_eps, a lower bound for the true supremum since only k levels are sampled."""
    return sandwich_estimate(sample, epsilon).value


def _log_markov_bound(s: float, c: float, v: float, mean: float, order: int) -> float:
    return -c * v * s ** 1.5 + v * mean + thinned_log_cdf(-s, v, order)


def markov_tail_bound(s: float, c: float, v: float, order: int = DEFAULT_ORDER) -> float:
    """
    exp(-c v s^(3/2) + v E[chi]) F(-s; v), which bounds
    P(chi([-s, inf)) - E chi <= -c s^(3/2)) for every v > 0.
    """
    s = NumericValidator.require_positive('s', s)
    c = NumericValidator.require_positive('c', c)
    v = NumericValidator.require_positive('v', v)
    return min(1.0, math.exp(_log_markov_bound(s, c, v, counting_mean_exact(s), order)))


def chernoff_tail_bound(s: float, c: float, v_max: float = MARKOV_V_MAX,
                        order: int = DEFAULT_ORDER) -> Tuple[float, float]:
    """markov_tail_bound minimized over v in (0, v_max]; returns (bound, v)."""
    s = NumericValidator.require_positive('s', s)
    c = NumericValidator.require_positive('c', c)
    v_max = NumericValidator.require_positive('v_max', v_max)
    mean = counting_mean_exact(s)
    result = minimize_scalar(lambda v: _log_markov_bound(s, c, v, mean, order),
                             bounds=(1e-6, v_max), method='bounded', options={'xatol': 1e-6})
    best_v = float(result.x)
    return min(1.0, math.exp(float(result.fun))), best_v


def exact_deficit_probability(s: float, c: float, order: int = DEFAULT_ORDER) -> float:
    """P(chi([-s, inf)) <= E chi - c s^(3/2)) from the exact counting law."""
    s = NumericValidator.require_positive('s', s)
    c = NumericValidator.require_positive('c', c)
    threshold = counting_mean_exact(s) - c * s ** 1.5
    if threshold < 0.0:
        return 0.0
    n_max = int(math.floor(threshold))
    law = counting_distribution(s, n_max, order)
    return float(min(1.0, np.sum(law)))
