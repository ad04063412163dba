from dataclasses import dataclass
from typing import List

import numpy as np
from dataclasses_json import dataclass_json

from consts.grid_consts import DEFAULT_L_MAX
from consts.scattering_consts import SECOND_MATCHING_OFFSET, RESONANCE_THRESHOLD
from grids.radial_grid import RadialGrid
from scattering.potential import Potential, decay_constant, hardy_condition
from scattering.radial_solver import RadialSolver
from tools.logging import logger


@dataclass_json
@dataclass
class SpectralReport:
    bound_state_count_per_l: List[int]
    resonance_score: float
    h2_ok: bool
    generic_ok: bool
    hardy_ok: bool
    decay_constant: float


class SpectrumChecker:
    """
    Zero-energy diagnostics. Bound states per channel are the nodes of the regular k = 0 solution (Sturm
    oscillation), counting the one zero the free continuation a·r^{l+1} + b·r^{-l} may still have past R.
    """

    def __init__(self, l_max: int = DEFAULT_L_MAX):
        self._l_max = l_max

    def check(self, potential: Potential, grid: RadialGrid) -> SpectralReport:
        radius = min(potential.support_radius + SECOND_MATCHING_OFFSET, grid.nodes[-1])
        solver = RadialSolver(potential, grid)
        counts = [self._count_bound_states(solver, l, radius) for l in range(self._l_max + 1)]
        resonance_score = self._compute_resonance_score(solver, radius)
        report = SpectralReport(
            bound_state_count_per_l=counts,
            resonance_score=resonance_score,
            h2_ok=sum(counts) == 0,
            generic_ok=resonance_score >= RESONANCE_THRESHOLD,
            hardy_ok=hardy_condition(potential, grid),
            decay_constant=decay_constant(potential, grid)
        )
        self._log_report(potential, report)

        return report

    @staticmethod
    def _count_bound_states(solver: RadialSolver, l: int, radius: float) -> int:
        values, end_value, end_slope = solver.solve_zero_energy(l, radius)
        signs = np.sign(np.append(values, end_value))
        signs = signs[signs != 0]
        inner_nodes = int(np.sum(signs[:-1] * signs[1:] < 0))
        growth = (l * end_value / radius + end_slope) / (2 * l + 1)

        if growth != 0 and np.sign(growth) != np.sign(end_value):
            inner_nodes += 1

        return inner_nodes

    @staticmethod
    def _compute_resonance_score(solver: RadialSolver, radius: float) -> float:
        """|R·u'(R)/u(R)| of the l = 0 zero-energy solution; zero when it flattens to a constant."""
        _, end_value, end_slope = solver.solve_zero_energy(0, radius)

        if end_value == 0:
            return float('inf')

        return abs(radius * end_slope / end_value)

    @staticmethod
    def _log_report(potential: Potential, report: SpectralReport) -> None:
        if not report.h2_ok:
            logger.warning(f"{potential} supports bound states: {report.bound_state_count_per_l}")

        if not report.generic_ok:
            logger.warning(f"{potential} is close to a zero resonance (score {report.resonance_score:.3g})")


def check_spectrum(potential: Potential, grid: RadialGrid, l_max: int = DEFAULT_L_MAX) -> SpectralReport:
    return SpectrumChecker(l_max).check(potential, grid)
