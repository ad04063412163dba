from dataclasses import dataclass

from consts.estimates_consts import PLANCHEREL_TOLERANCE, INVERSION_TOLERANCE, DIAGONALIZATION_TOLERANCE, \
    UNITARITY_TOLERANCE, INTERTWINING_TOLERANCE, DEFAULT_SEPARATION_TOLERANCE, IDENTITY_TOLERANCE
from consts.nls_consts import PHYSICAL_RESIDUAL_TOLERANCE, SPECTRAL_DISCREPANCY_TOLERANCE
from consts.pseudoproduct_consts import TRIANGLE_ORACLE_TOLERANCE, SYMMETRY_TOLERANCE, WEAK_FORM_TOLERANCE


@dataclass
class ToleranceConfig:
    plancherel: float = PLANCHEREL_TOLERANCE
    inversion: float = INVERSION_TOLERANCE
    diagonalization: float = DIAGONALIZATION_TOLERANCE
    unitarity: float = UNITARITY_TOLERANCE
    intertwining: float = INTERTWINING_TOLERANCE
    separation: float = DEFAULT_SEPARATION_TOLERANCE
    identity: float = IDENTITY_TOLERANCE
    triangle_oracle: float = TRIANGLE_ORACLE_TOLERANCE
    symmetry: float = SYMMETRY_TOLERANCE
    weak_form: float = WEAK_FORM_TOLERANCE
    duhamel: float = PHYSICAL_RESIDUAL_TOLERANCE
    spectral_duhamel: float = SPECTRAL_DISCREPANCY_TOLERANCE
