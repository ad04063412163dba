from dataclasses import dataclass

from exceptions import ShapeMismatchError
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from scattering.scattering_table import ScatteringTable
from transform.distorted_fourier_transform import DistortedFourierTransform, get_transform


@dataclass(eq=False)
class WaveOperatorTables:
    """The distorted table of H and the free table of −Δ on the same grids."""
    distorted: ScatteringTable
    flat: ScatteringTable

    def __post_init__(self):
        if not self.flat.is_free:
            raise ShapeMismatchError("The flat table must belong to the zero potential")

        same_grids = self.distorted.radial_grid == self.flat.radial_grid and \
            self.distorted.momentum_grid == self.flat.momentum_grid

        if not same_grids or self.distorted.l_max != self.flat.l_max:
            raise ShapeMismatchError("Distorted and flat tables must share grids and channel count")

    @property
    def radial_grid(self) -> RadialGrid:
        return self.distorted.radial_grid

    @property
    def momentum_grid(self) -> MomentumGrid:
        return self.distorted.momentum_grid

    @property
    def l_max(self) -> int:
        return self.distorted.l_max

    @property
    def is_free(self) -> bool:
        return self.distorted.is_free

    @property
    def distorted_transform(self) -> DistortedFourierTransform:
        return get_transform(self.distorted)

    @property
    def flat_transform(self) -> DistortedFourierTransform:
        return get_transform(self.flat)
