from typing import Optional, Tuple

import numpy as np

from consts.typing_consts import RealArray
from grids.axisymmetric_field import AxisymmetricField
from scattering.radial_solver import RadialSolver
from scattering.riccati_bessel import riccati_j
from scattering.scattering_table import ScatteringTable


def distorted_plane_wave(table: ScatteringTable, k: float, l_max: Optional[int] = None) -> AxisymmetricField:
    """
    e(x; k·ẑ) = ∑_l (2l+1) i^l e^{iδ_l(k)} u_l(k, r)/(kr) P_l(cosθ). Channels the table lacks, and momenta
    off the grid, are solved on demand.
    """
    index = table.momentum_index(k)
    l_max = table.l_max if l_max is None else l_max
    radial_grid = table.radial_grid
    field = AxisymmetricField.zeros(radial_grid, l_max)

    for l in range(l_max + 1):
        solution, phase_shift = _channel_solution(table, k, index, l)
        field.channels[l] = (2 * l + 1) * 1j ** l * np.exp(1j * phase_shift) * solution / (k * radial_grid.nodes)

    return field


def _channel_solution(table: ScatteringTable, k: float, index: int, l: int) -> Tuple[RealArray, float]:
    if table.is_free:
        return riccati_j(l, k * table.radial_grid.nodes), 0.0

    on_grid = np.isclose(table.momentum_grid.nodes[index], k, rtol=1e-12, atol=0.0)

    if on_grid and l <= table.l_max:
        return table.solutions[l, index], float(table.phase_shifts[l, index])

    channel = RadialSolver(table.potential, table.radial_grid).solve_channel(l, np.array([k]))
    return channel.solutions[0], float(channel.phase_shifts[0])
