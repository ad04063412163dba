from dataclasses import dataclass

import numpy as np
from pandas import DataFrame

from consts.grid_consts import CHANNEL, MOMENTUM
from consts.scattering_consts import PHASE_SHIFT, UNWRAPPED_PHASE_SHIFT
from consts.typing_consts import ComplexArray, RealArray
from exceptions import RangeError
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from scattering.potential import Potential


@dataclass(eq=False)
class ScatteringTable:
    """
    Regular solutions u_l(k_j, r_i), shape (L + 1, n_k, n_r), normalized so that beyond the support
    u_l = cos δ_l·ĵ_l(kr) − sin δ_l·n̂_l(kr); phase shifts in (−π/2, π/2] and unwrapped from k_max downwards.
    """
    potential: Potential
    radial_grid: RadialGrid
    momentum_grid: MomentumGrid
    solutions: RealArray
    phase_shifts: RealArray
    unwrapped_phase_shifts: RealArray
    matching_residuals: RealArray

    @property
    def l_max(self) -> int:
        return self.solutions.shape[0] - 1

    @property
    def is_free(self) -> bool:
        return self.potential.is_zero

    def eigenfunctions(self, l: int) -> RealArray:
        """E_l(k, r) = u_l(k, r)/(kr), shape (n_k, n_r)."""
        self._validate_channel(l)
        return self.solutions[l] / np.outer(self.momentum_grid.nodes, self.radial_grid.nodes)

    def phase_factors(self, l: int) -> ComplexArray:
        self._validate_channel(l)
        return np.exp(1j * self.phase_shifts[l])

    def momentum_index(self, k: float) -> int:
        if not self.momentum_grid.contains(k):
            raise RangeError(f"k={k} lies outside [{self.momentum_grid.k_min}, {self.momentum_grid.k_max}]")

        return int(np.argmin(np.abs(self.momentum_grid.nodes - k)))

    def to_frame(self) -> DataFrame:
        channels, indices = np.indices(self.phase_shifts.shape)
        return DataFrame({
            CHANNEL: channels.ravel(),
            MOMENTUM: self.momentum_grid.nodes[indices.ravel()],
            PHASE_SHIFT: self.phase_shifts.ravel(),
            UNWRAPPED_PHASE_SHIFT: self.unwrapped_phase_shifts.ravel()
        })

    def _validate_channel(self, l: int) -> None:
        if not 0 <= l <= self.l_max:
            raise RangeError(f"Channel l={l} is not in the table (L = {self.l_max})")
