from typing import Tuple

import numpy as np

from consts.grid_consts import MIN_GRID_NODES, WEIGHT_SUM_TOLERANCE
from exceptions import ConfigurationError
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid


def make_grids(r_max: float, n_r: int, k_max: float, n_k: int) -> Tuple[RadialGrid, MomentumGrid]:
    _validate_extent('r_max', r_max)
    _validate_extent('k_max', k_max)
    _validate_count('n_r', n_r)
    _validate_count('n_k', n_k)
    radial_grid = RadialGrid(r_max=float(r_max), n_r=int(n_r))
    momentum_grid = MomentumGrid(k_max=float(k_max), n_k=int(n_k))
    _validate_weights(radial_grid)
    _validate_aliasing(radial_grid, momentum_grid)

    return radial_grid, momentum_grid


def _validate_extent(name: str, value: float) -> None:
    if not np.isfinite(value) or value <= 0:
        raise ConfigurationError(f"`{name}` must be positive, got {value}")


def _validate_count(name: str, value: int) -> None:
    if int(value) != value or value < MIN_GRID_NODES:
        raise ConfigurationError(f"`{name}` must be an integer ≥ {MIN_GRID_NODES}, got {value}")


def _validate_weights(radial_grid: RadialGrid) -> None:
    total = float(np.sum(radial_grid.weights))

    if abs(total - radial_grid.r_max) > WEIGHT_SUM_TOLERANCE * radial_grid.r_max:
        raise ConfigurationError(f"Radial weights sum to {total}, expected {radial_grid.r_max}")


def _validate_aliasing(radial_grid: RadialGrid, momentum_grid: MomentumGrid) -> None:
    if momentum_grid.alias_period <= 2 * radial_grid.r_max:
        raise ConfigurationError(
            f"Momentum spacing {momentum_grid.spacing} aliases the radial box: 2π/Δk = {momentum_grid.alias_period:.3f} "
            f"must exceed 2·r_max = {2 * radial_grid.r_max}. Increase n_k or reduce k_max"
        )
