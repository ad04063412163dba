from dataclasses import dataclass

import numpy as np
from dataclasses_json import dataclass_json

from consts.nls_consts import DECAY_WINDOW_START, MIN_WINDOW_DECADES
from exceptions import DomainError
from grids.field_algebra import lp_norm
from nls.trajectory import Trajectory
from tools.logging import logger
from utils.numeric_utils import log_log_slope


@dataclass_json
@dataclass
class DecayFit:
    p: float
    slope: float
    target: float
    r_squared: float
    decades: float
    low_confidence: bool


def decay_target(p: float) -> float:
    """−(3/2)(1 − 2/p)."""
    return -1.5 * (1 - 2 / p)


def decay_fit(trajectory: Trajectory, p: float, window_start: float = DECAY_WINDOW_START) -> DecayFit:
    if not 2 <= p <= 6:
        raise DomainError(f"Decay fits are defined for p ∈ [2, 6], got {p}")

    pairs = [(t, u) for t, u in zip(trajectory.times, trajectory.snapshots) if t >= window_start]
    target = decay_target(p)

    if len(pairs) < 2:
        logger.warning(f"Decay window t ≥ {window_start} holds {len(pairs)} snapshots; no fit for p={p}")
        return DecayFit(p, float('nan'), target, float('nan'), 0.0, True)

    times = [t for t, _ in pairs]
    norms = [lp_norm(u, p) for _, u in pairs]
    decades = float(np.log10(times[-1] / times[0]))

    if min(norms) <= 0:
        logger.warning(f"The L^{p:g} norm vanishes inside the decay window; no fit")
        return DecayFit(p, float('nan'), target, float('nan'), decades, True)

    slope, r_squared = log_log_slope(times, norms)
    low_confidence = decades < MIN_WINDOW_DECADES

    if low_confidence:
        logger.warning(f"Decay window spans {decades:.2f} decades; the p={p:g} slope {slope:.3f} is low confidence")

    return DecayFit(p, slope, target, r_squared, decades, low_confidence)
