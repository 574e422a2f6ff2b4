"""
AiryProcess Module - Stochastic Airy Operator and Rigidity
==========================================================
"""

from .airy_process_models import SaoMesh, SpectrumSample, CountingStats, RigidityBounds, SandwichEstimate
from .airy_zeros import airy_eigenvalue, airy_eigenvalues, zero_seed, zero_remainder
from .sao_sampler import (
    replicate_generator,
    sao_bands,
    sample_sao_spectrum,
    sample_spectra,
    sample_counts,
    count_below,
    run_replicates
)
from .counting_service import (
    counting_statistics,
    counting_mean_leading,
    counting_variance_leading,
    rigidity_bounds,
    sandwich_estimate,
    sandwich_constant,
    markov_tail_bound,
    chernoff_tail_bound,
    exact_deficit_probability
)

__all__ = [
    'SaoMesh',
    'SpectrumSample',
    'CountingStats',
    'RigidityBounds',
    'SandwichEstimate',
    'airy_eigenvalue',
    'airy_eigenvalues',
    'zero_seed',
    'zero_remainder',
    'replicate_generator',
    'sao_bands',
    'sample_sao_spectrum',
    'sample_spectra',
    'sample_counts',
    'count_below',
    'run_replicates',
    'counting_statistics',
    'counting_mean_leading',
    'counting_variance_leading',
    'rigidity_bounds',
    'sandwich_estimate',
    'sandwich_constant',
    'markov_tail_bound',
    'chernoff_tail_bound',
    'exact_deficit_probability'
]
