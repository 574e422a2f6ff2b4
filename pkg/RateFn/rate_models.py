"""
RateFn Data Models
==================
"""

from dataclasses import dataclass
from typing import Dict, NamedTuple

from general.Error.error_manager import DomainError


@dataclass(frozen=True)
class RatePoint:
    """Both lower-tail rate functions at one z <= 0; ratio is the limit 1 at z = 0."""
    z: float
    phi_minus: float
    phi_tilde: float
    ratio: float

    def __post_init__(self):
        if self.z > 0.0:
            raise DomainError("rate functions are defined for z <= 0", {'z': self.z})
        if self.phi_minus < 0.0 or self.phi_tilde < 0.0:
            raise DomainError("rate functions must be nonnegative",
                              {'z': self.z, 'phi_minus': self.phi_minus, 'phi_tilde': self.phi_tilde})

    def to_row(self) -> Dict[str, float]:
        return {'z': self.z, 'phi_minus': self.phi_minus, 'phi_tilde': self.phi_tilde, 'ratio': self.ratio}


class VariationalResult(NamedTuple):
    r_star: float
    value: float
