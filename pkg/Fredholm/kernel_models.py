"""
Fredholm Kernel Models
======================

Kernel descriptors and determinant results.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from general.Error.error_manager import DomainError
from general.Validation.input_validation import NumericValidator


class KernelVariant(str, Enum):
    """Which integral kernel is in play."""
    AIRY = "airy"
    THINNED_AIRY = "thinned_airy"
    FERMI_AIRY = "fermi_airy"


@dataclass(frozen=True)
class KernelSpec:
    """
    Kernel variant plus its parameters.

    For the Airy variants the operator acts on L2([left_endpoint, inf)).
    For FERMI_AIRY the operator acts on the whole line, sandwiched by
    sqrt(sigma(a - left_endpoint)); ``left_endpoint`` is the Fermi
    transition point -s.
    """
    variant: KernelVariant
    left_endpoint: float
    gamma: float = 1.0
    T: Optional[float] = None

    def __post_init__(self):
        NumericValidator.require_finite('left_endpoint', self.left_endpoint)
        if self.variant == KernelVariant.THINNED_AIRY:
            NumericValidator.require_range('gamma', self.gamma, 0.0, 1.0)
        elif self.variant == KernelVariant.FERMI_AIRY:
            if self.T is None:
                raise DomainError("FermiAiry kernel needs T", {'T': None})
            NumericValidator.require_positive('T', self.T)
        elif self.gamma != 1.0:
            raise DomainError("plain Airy kernel has gamma = 1", {'gamma': self.gamma})

    @classmethod
    def airy(cls, left_endpoint: float) -> 'KernelSpec':
        return cls(KernelVariant.AIRY, left_endpoint)

    @classmethod
    def thinned(cls, left_endpoint: float, gamma: float) -> 'KernelSpec':
        return cls(KernelVariant.THINNED_AIRY, left_endpoint, gamma=gamma)

    @classmethod
    def fermi(cls, s: float, T: float) -> 'KernelSpec':
        return cls(KernelVariant.FERMI_AIRY, -float(s), T=T)

    @property
    def multiplier(self) -> float:
        return self.gamma if self.variant == KernelVariant.THINNED_AIRY else 1.0

    @property
    def transition_width(self) -> Optional[float]:
        """1/T^(1/3) for the Fermi kernel."""
        if self.variant != KernelVariant.FERMI_AIRY:
            return None
        return float(self.T) ** (-1.0 / 3.0)


@dataclass(frozen=True, eq=False)
class LogDeterminantResult:
    """log det(I - K) with the spectrum of the discretized kernel."""
    log_det: float
    eigenvalues: np.ndarray = field(repr=False)
    max_eigenvalue: float
    order_used: int
    error_estimate: float

    @property
    def determinant(self) -> float:
        return float(np.exp(self.log_det))
