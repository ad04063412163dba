from typing import List, Sequence

import numpy as np

from exceptions import DegenerateInputError, DomainError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm, lp_norm, multiply_radial_weight
from waveop.wave_operator import propagator, wave_operator_adjoint
from waveop.wave_operator_tables import WaveOperatorTables


def dispersive_exponent(p: float) -> float:
    """Decay rate 3(1/2 − 1/p) of ‖e^{itH}f‖_p."""
    return 3 * (0.5 - 1 / p)


def weighted_data_norm(f: AxisymmetricField, tables: WaveOperatorTables) -> float:
    """‖⟨x⟩Ω*f‖₂."""
    pulled = wave_operator_adjoint(f, tables)
    return l2_norm(multiply_radial_weight(pulled, lambda r: np.sqrt(1 + r ** 2)))


def dispersive_ratio(f: AxisymmetricField, t: float, tables: WaveOperatorTables, p: float = 6) -> float:
    """t^{3(1/2−1/p)}·‖e^{itH}f‖_p / ‖⟨x⟩Ω*f‖₂ for t ≥ 1 and p ∈ [2, 6]."""
    return dispersive_series(f, [t], tables, p)[0]


def dispersive_series(f: AxisymmetricField,
                      times: Sequence[float],
                      tables: WaveOperatorTables,
                      p: float = 6) -> List[float]:
    if not 2 <= p <= 6:
        raise DomainError(f"Dispersive ratios are defined for p ∈ [2, 6], got {p}")

    if any(t < 1 for t in times):
        raise DomainError(f"Dispersive ratios need t ≥ 1, got {min(times)}")

    denominator = weighted_data_norm(f, tables)

    if denominator == 0:
        raise DegenerateInputError("‖⟨x⟩Ω*f‖₂ vanishes; the dispersive ratio is undefined")

    exponent = dispersive_exponent(p)
    return [t ** exponent * lp_norm(propagator(f, t, tables.distorted), p) / denominator for t in times]
