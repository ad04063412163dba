from dataclasses import dataclass
from typing import List

import numpy as np
from dataclasses_json import dataclass_json

from consts.typing_consts import RealArray
from grids.momentum_grid import MomentumGrid


@dataclass_json
@dataclass
class ResonanceReport:
    time_resonant_points: int
    space_resonant_points: int
    min_phase: float
    min_phase_point: List[float]
    min_phase_gradient: float


def phase_symbol(first: RealArray, second: RealArray, third: RealArray) -> RealArray:
    """φ(ξ, η, ζ) = |ξ|² + |η|² + |ζ|², the Duhamel phase of the ū² interaction."""
    return np.asarray(first) ** 2 + np.asarray(second) ** 2 + np.asarray(third) ** 2


def resonance_sets(momentum_grid: MomentumGrid) -> ResonanceReport:
    """
    Counts grid points of {φ = 0} and of {∂_η φ = ∂_ζ φ = 0}. Both are empty on k ≥ k_min, and φ and |∇_{η,ζ}φ|
    are smallest at the corner (k_min, k_min, k_min), which tends to the origin as the grid is refined.
    """
    nodes = momentum_grid.nodes
    squares = nodes ** 2
    pairs = np.sort((squares[:, None] + squares[None, :]).ravel())
    floor = np.finfo(float).eps

    time_resonant = int(np.sum(np.searchsorted(pairs, floor - squares, side='right')))
    space_resonant = int(np.count_nonzero(2 * np.sqrt(pairs) <= floor)) * nodes.size
    corner = float(nodes[int(np.argmin(squares))])

    return ResonanceReport(
        time_resonant_points=time_resonant,
        space_resonant_points=space_resonant,
        min_phase=float(phase_symbol(corner, corner, corner)),
        min_phase_point=[corner] * 3,
        min_phase_gradient=float(2 * np.sqrt(pairs[0]))
    )
