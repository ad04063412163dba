from dataclasses import dataclass
from functools import cached_property

import numpy as np

from consts.typing_consts import RealArray


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform nodes k_j = jΔk (j = 1..n_k) with trapezoid weights; the k = 0 end contributes nothing."""
    k_max: float
    n_k: int

    @cached_property
    def spacing(self) -> float:
        return self.k_max / self.n_k

    @property
    def k_min(self) -> float:
        return self.spacing

    @cached_property
    def nodes(self) -> RealArray:
        return np.arange(1, self.n_k + 1) * self.spacing

    @cached_property
    def weights(self) -> RealArray:
        weights = np.full(self.n_k, self.spacing)
        weights[-1] = 0.5 * self.spacing

        return weights

    @cached_property
    def volume_weights(self) -> RealArray:
        return self.weights * self.nodes ** 2

    @property
    def alias_period(self) -> float:
        return 2 * np.pi / self.spacing

    def contains(self, k: float) -> bool:
        return self.k_min <= k <= self.k_max
