from dataclasses import dataclass
from typing import List

import numpy as np

from consts.transform_consts import DEFAULT_LADDER_DEPTH
from consts.typing_consts import RealArray
from exceptions import RangeError
from models.littlewood_paley_mode import LittlewoodPaleyMode
from transform.bumps import band_pass_bump, low_pass_bump


@dataclass(frozen=True)
class DyadicLadder:
    """Scales N = 2^{−J}, …, 2^{J}; band symbols Φ(k/N) and low-pass symbols Ψ(k/N)."""
    depth: int = DEFAULT_LADDER_DEPTH

    @property
    def scales(self) -> List[float]:
        return [2.0 ** exponent for exponent in range(-self.depth, self.depth + 1)]

    @property
    def lowest_scale(self) -> float:
        return 2.0 ** -self.depth

    def validate_scale(self, scale: float) -> None:
        if scale not in self.scales:
            raise RangeError(f"N={scale} is not a dyadic scale of the ladder 2^-{self.depth}..2^{self.depth}")

    def symbol(self, k: RealArray, scale: float, mode: LittlewoodPaleyMode = LittlewoodPaleyMode.BAND) -> RealArray:
        self.validate_scale(scale)

        if mode == LittlewoodPaleyMode.BAND:
            return band_pass_bump(np.asarray(k) / scale)

        return low_pass_bump(np.asarray(k) / scale)

    def partition_defect(self, k: RealArray) -> float:
        """max_k |∑_N Φ(k/N) + Ψ(k/2^{−J}) − 1|; zero whenever k ≤ 2^{J+1}."""
        total = low_pass_bump(np.asarray(k) / self.lowest_scale)

        for scale in self.scales:
            total = total + band_pass_bump(np.asarray(k) / scale)

        return float(np.max(np.abs(total - 1.0)))
