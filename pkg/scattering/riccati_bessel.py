from typing import Tuple

import numpy as np
from scipy.special import spherical_jn, spherical_yn

from consts.typing_consts import RealArray


def riccati_j(l: int, x: RealArray) -> RealArray:
    """ĵ_l(x) = x·j_l(x), the regular Riccati–Bessel function (sin x at l = 0)."""
    return x * spherical_jn(l, x)


def riccati_y(l: int, x: RealArray) -> RealArray:
    """n̂_l(x) = x·y_l(x); with this sign n̂_0 = −cos x."""
    return x * spherical_yn(l, x)


def riccati_j_with_derivative(l: int, x: RealArray) -> Tuple[RealArray, RealArray]:
    values = spherical_jn(l, x)
    return x * values, values + x * spherical_jn(l, x, derivative=True)


def riccati_y_with_derivative(l: int, x: RealArray) -> Tuple[RealArray, RealArray]:
    values = spherical_yn(l, x)
    return x * values, values + x * spherical_yn(l, x, derivative=True)


def matched_solution(l: int, x: RealArray, phase_shift: RealArray) -> RealArray:
    """cos δ · ĵ_l(x) − sin δ · n̂_l(x) ~ sin(x − lπ/2 + δ)."""
    return np.cos(phase_shift) * riccati_j(l, x) - np.sin(phase_shift) * riccati_y(l, x)
