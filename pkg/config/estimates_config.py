from dataclasses import dataclass, field
from typing import List

from consts.estimates_consts import DEFAULT_HOLDER_P, DEFAULT_HOLDER_Q, DEFAULT_HOLDER_R_PRIME, \
    DEFAULT_HOLDER_SYMBOLS, DEFAULT_COMMUTATOR_P, DEFAULT_COMMUTATOR_Q, DEFAULT_DISPERSIVE_P, \
    DEFAULT_DISPERSIVE_FINAL_TIME
from models.separation_method import SeparationMethod


@dataclass
class EstimatesConfig:
    p: float = DEFAULT_HOLDER_P
    q: float = DEFAULT_HOLDER_Q
    r_prime: float = DEFAULT_HOLDER_R_PRIME
    symbols: List[str] = field(default_factory=lambda: list(DEFAULT_HOLDER_SYMBOLS))
    separation_method: SeparationMethod = SeparationMethod.GLOBAL
    commutator_p: float = DEFAULT_COMMUTATOR_P
    commutator_q: float = DEFAULT_COMMUTATOR_Q
    dispersive_p: float = DEFAULT_DISPERSIVE_P
    dispersive_final_time: float = DEFAULT_DISPERSIVE_FINAL_TIME
