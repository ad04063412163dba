import numpy as np

from consts.typing_consts import RealArray


def quintic_smoothstep(t: RealArray) -> RealArray:
    """C² ramp from 0 (t ≤ 0) to 1 (t ≥ 1)."""
    t = np.clip(t, 0.0, 1.0)
    return t ** 3 * (10 - 15 * t + 6 * t ** 2)


def septic_smoothstep(t: RealArray) -> RealArray:
    """C³ ramp from 0 (t ≤ 0) to 1 (t ≥ 1)."""
    t = np.clip(t, 0.0, 1.0)
    return t ** 4 * (35 - 84 * t + 70 * t ** 2 - 20 * t ** 3)


def cubic_smoothstep(t: RealArray) -> RealArray:
    t = np.clip(t, 0.0, 1.0)
    return t ** 2 * (3 - 2 * t)


def low_pass_bump(k: RealArray) -> RealArray:
    """Ψ: 1 on [0, 1], 0 on [2, ∞), C² quintic in between."""
    return 1.0 - quintic_smoothstep(np.asarray(k, dtype=float) - 1.0)


def band_pass_bump(k: RealArray) -> RealArray:
    """Φ(k) = Ψ(k/2) − Ψ(k), supported in [1, 4]; the dilates Φ(k/N) telescope over dyadic N."""
    k = np.asarray(k, dtype=float)
    return low_pass_bump(k / 2) - low_pass_bump(k)


def smooth_ramp(t: RealArray) -> RealArray:
    """C^∞ ramp from 0 (t ≤ 0) to 1 (t ≥ 1) built from e^{−1/t}; every derivative vanishes at both ends."""
    t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)

    with np.errstate(divide='ignore', over='ignore'):
        rising = np.where(t > 0, np.exp(-1.0 / np.where(t > 0, t, 1.0)), 0.0)
        falling = np.where(t < 1, np.exp(-1.0 / np.where(t < 1, 1.0 - t, 1.0)), 0.0)

    return rising / (rising + falling)


def smooth_plateau(x: RealArray, inner: float, outer: float) -> RealArray:
    """C^∞ window equal to 1 for |x| ≤ inner and 0 for |x| ≥ outer."""
    return 1.0 - smooth_ramp((np.abs(x) - inner) / (outer - inner))
