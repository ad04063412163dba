import numpy as np
from scipy.special import spherical_jn

from consts.typing_consts import RealArray
from grids.radial_grid import RadialGrid
from scattering.potential import Potential
from utils.numeric_utils import wrap_to_half_branch


def born_phase_shift(potential: Potential, k: RealArray, l: int, grid: RadialGrid) -> RealArray:
    """First Born approximation δ_l ≈ −k ∫ V(r) j_l(kr)² r² dr."""
    k = np.atleast_1d(np.asarray(k, dtype=float))
    bessel = spherical_jn(l, np.outer(k, grid.nodes))
    integrand = potential(grid.nodes)[None, :] * bessel ** 2

    return -k * (integrand @ grid.volume_weights)


def spherical_well_phase_shift(depth: float, width: float, k: RealArray) -> RealArray:
    """s-wave shift of V = −depth on r < width: −ka + atan((k/K) tan(Ka)), K = √(k² + depth)."""
    k = np.asarray(k, dtype=float)
    inner_momentum = np.sqrt(k ** 2 + depth)
    phase_shift = -k * width + np.arctan(k / inner_momentum * np.tan(inner_momentum * width))

    return wrap_to_half_branch(phase_shift)
