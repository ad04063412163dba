from dataclasses import dataclass
from typing import Tuple

from consts.grid_consts import DEFAULT_R_MAX, DEFAULT_N_R, DEFAULT_K_MAX, DEFAULT_N_K, DEFAULT_L_MAX
from grids.grid_factory import make_grids
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid


@dataclass
class GridConfig:
    r_max: float = DEFAULT_R_MAX
    n_r: int = DEFAULT_N_R
    k_max: float = DEFAULT_K_MAX
    n_k: int = DEFAULT_N_K
    l_max: int = DEFAULT_L_MAX

    def to_grids(self) -> Tuple[RadialGrid, MomentumGrid]:
        return make_grids(self.r_max, self.n_r, self.k_max, self.n_k)
