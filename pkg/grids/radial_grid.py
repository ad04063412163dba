from dataclasses import dataclass
from functools import cached_property

import numpy as np

from consts.typing_consts import RealArray


@dataclass(frozen=True)
class RadialGrid:
    """Composite midpoint rule for ∫₀^{r_max} · dr: nodes (i − ½)Δr, weights Δr."""
    r_max: float
    n_r: int

    @cached_property
    def spacing(self) -> float:
        return self.r_max / self.n_r

    @cached_property
    def nodes(self) -> RealArray:
        return (np.arange(1, self.n_r + 1) - 0.5) * self.spacing

    @cached_property
    def weights(self) -> RealArray:
        return np.full(self.n_r, self.spacing)

    @cached_property
    def volume_weights(self) -> RealArray:
        return self.weights * self.nodes ** 2

    def index_of(self, radius: float) -> int:
        index = int(np.argmin(np.abs(self.nodes - radius)))
        return index
