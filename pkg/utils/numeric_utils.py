from typing import Sequence, Tuple

import numpy as np

from exceptions import NumericError


def ensure_finite(values: np.ndarray, description: str) -> np.ndarray:
    if not np.all(np.isfinite(values)):
        raise NumericError(f"{description} contains non-finite values")

    return values


def relative_difference(value: float, reference: float) -> float:
    scale = abs(reference)

    if scale == 0:
        return abs(value)

    return abs(value - reference) / scale


def spread_ratio(values: Sequence[float]) -> float:
    """max/min of a positive family; infinite when a member vanishes."""
    array = np.asarray(values, dtype=float)

    if array.size == 0:
        return float('nan')

    minimum = np.min(array)

    if minimum <= 0:
        return float('inf')

    return float(np.max(array) / minimum)


def log_log_slope(x: Sequence[float], y: Sequence[float]) -> Tuple[float, float]:
    """Least-squares slope of log y against log x together with the fit's R²."""
    log_x = np.log(np.asarray(x, dtype=float))
    log_y = np.log(np.asarray(y, dtype=float))
    slope, intercept = np.polyfit(log_x, log_y, 1)
    residual = log_y - (slope * log_x + intercept)
    total = np.sum((log_y - np.mean(log_y)) ** 2)
    r_squared = 1.0 - np.sum(residual ** 2) / total if total > 0 else 1.0

    return float(slope), float(r_squared)


def wrap_to_half_branch(angle: np.ndarray) -> np.ndarray:
    """Maps angles modulo π into (−π/2, π/2]."""
    wrapped = np.mod(np.asarray(angle) + np.pi / 2, np.pi) - np.pi / 2
    return np.where(wrapped == -np.pi / 2, np.pi / 2, wrapped)
