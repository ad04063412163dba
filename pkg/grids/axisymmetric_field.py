from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from consts.grid_consts import TAIL_MASS_WARNING, TAIL_REGION_FRACTION
from consts.typing_consts import ComplexArray, RadialFunction, RealArray
from exceptions import ShapeMismatchError
from grids.angular_quadrature import AngularQuadrature, default_angular_nodes, get_angular_quadrature
from grids.radial_grid import RadialGrid
from tools.logging import logger

Scalar = Union[int, float, complex]


@dataclass
class AxisymmetricField:
    """
    f(x) = ∑_{l ≤ L} f_l(r) P_l(cosθ) sampled on the radial nodes. `channels` has shape (L + 1, n_r).
    `dropped_mass` is the L² mass discarded by the channel truncation that produced this field.
    """
    channels: ComplexArray
    grid: RadialGrid
    dropped_mass: float = 0.0

    def __post_init__(self):
        self.channels = np.atleast_2d(np.asarray(self.channels, dtype=np.complex128))

        if self.channels.shape[1] != self.grid.n_r:
            raise ShapeMismatchError(
                f"Field has {self.channels.shape[1]} radial samples but the grid has {self.grid.n_r} nodes"
            )

    @classmethod
    def zeros(cls, grid: RadialGrid, l_max: int) -> "AxisymmetricField":
        return cls(np.zeros((l_max + 1, grid.n_r), dtype=np.complex128), grid)

    @classmethod
    def from_radial(cls,
                    grid: RadialGrid,
                    function: Union[RadialFunction, RealArray, ComplexArray],
                    l: int = 0,
                    l_max: Optional[int] = None) -> "AxisymmetricField":
        values = function(grid.nodes) if callable(function) else np.asarray(function)
        field = cls.zeros(grid, max(l, l_max or 0))
        field.channels[l] = values
        field.warn_on_tail_mass()

        return field

    @classmethod
    def from_collocation(cls,
                         values: ComplexArray,
                         grid: RadialGrid,
                         l_max: int,
                         quadrature: AngularQuadrature) -> "AxisymmetricField":
        channels = quadrature.projection_matrix(l_max) @ values
        return cls(channels, grid)

    @property
    def l_max(self) -> int:
        return self.channels.shape[0] - 1

    def to_collocation(self, quadrature: Optional[AngularQuadrature] = None) -> ComplexArray:
        """Values on the (μ_q, r_i) product grid, shape (n_mu, n_r)."""
        quadrature = quadrature or get_angular_quadrature(default_angular_nodes(self.l_max))
        return quadrature.legendre_matrix(self.l_max) @ self.channels

    def with_l_max(self, l_max: int) -> "AxisymmetricField":
        if l_max == self.l_max:
            return self

        if l_max > self.l_max:
            padding = np.zeros((l_max - self.l_max, self.grid.n_r), dtype=np.complex128)
            return AxisymmetricField(np.vstack([self.channels, padding]), self.grid, self.dropped_mass)

        dropped = self.channel_masses()[l_max + 1:].sum()
        return AxisymmetricField(self.channels[:l_max + 1].copy(), self.grid, self.dropped_mass + dropped)

    def channel_masses(self) -> RealArray:
        degrees = np.arange(self.l_max + 1)
        radial_masses = np.abs(self.channels) ** 2 @ self.grid.volume_weights

        return 4 * np.pi / (2 * degrees + 1) * radial_masses

    def mass(self) -> float:
        return float(self.channel_masses().sum())

    def tail_mass(self, fraction: float = TAIL_REGION_FRACTION) -> float:
        """Share of the L² mass carried by r > fraction · r_max."""
        total = self.mass()

        if total == 0:
            return 0.0

        outer = self.grid.nodes > fraction * self.grid.r_max
        degrees = np.arange(self.l_max + 1)
        outer_masses = np.abs(self.channels[:, outer]) ** 2 @ self.grid.volume_weights[outer]

        return float(np.sum(4 * np.pi / (2 * degrees + 1) * outer_masses) / total)

    def warn_on_tail_mass(self) -> None:
        tail = self.tail_mass()

        if tail > TAIL_MASS_WARNING:
            logger.warning(f"Field carries {tail:.2e} of its L² mass near r_max; results are box-limited")

    def conj(self) -> "AxisymmetricField":
        return AxisymmetricField(np.conj(self.channels), self.grid, self.dropped_mass)

    def _validate_compatible(self, other: "AxisymmetricField") -> None:
        if other.grid != self.grid:
            raise ShapeMismatchError(f"Fields live on different radial grids: {self.grid} vs {other.grid}")

    def __add__(self, other: "AxisymmetricField") -> "AxisymmetricField":
        self._validate_compatible(other)
        l_max = max(self.l_max, other.l_max)
        channels = self.with_l_max(l_max).channels + other.with_l_max(l_max).channels

        return AxisymmetricField(channels, self.grid, self.dropped_mass + other.dropped_mass)

    def __sub__(self, other: "AxisymmetricField") -> "AxisymmetricField":
        return self + (-other)

    def __neg__(self) -> "AxisymmetricField":
        return AxisymmetricField(-self.channels, self.grid, self.dropped_mass)

    def __mul__(self, scalar: Scalar) -> "AxisymmetricField":
        return AxisymmetricField(scalar * self.channels, self.grid, self.dropped_mass)

    __rmul__ = __mul__
