from dataclasses import dataclass
from typing import Union

import numpy as np

from consts.typing_consts import ComplexArray, RealArray
from exceptions import ShapeMismatchError
from grids.momentum_grid import MomentumGrid

Scalar = Union[int, float, complex]


@dataclass
class SpectralField:
    """Distorted-frequency channels f♯_l(k_j), shape (L + 1, n_k)."""
    channels: ComplexArray
    grid: MomentumGrid
    dropped_mass: float = 0.0

    def __post_init__(self):
        self.channels = np.atleast_2d(np.asarray(self.channels, dtype=np.complex128))

        if self.channels.shape[1] != self.grid.n_k:
            raise ShapeMismatchError(
                f"Spectral field has {self.channels.shape[1]} samples but the grid has {self.grid.n_k} nodes"
            )

    @classmethod
    def zeros(cls, grid: MomentumGrid, l_max: int) -> "SpectralField":
        return cls(np.zeros((l_max + 1, grid.n_k), dtype=np.complex128), grid)

    @property
    def l_max(self) -> int:
        return self.channels.shape[0] - 1

    def channel_masses(self) -> RealArray:
        degrees = np.arange(self.l_max + 1)
        return 4 * np.pi / (2 * degrees + 1) * (np.abs(self.channels) ** 2 @ self.grid.volume_weights)

    def norm(self) -> float:
        return float(np.sqrt(self.channel_masses().sum()))

    def inner_product(self, other: "SpectralField") -> complex:
        self._validate_compatible(other)
        degrees = np.arange(min(self.l_max, other.l_max) + 1)
        products = (self.channels[degrees] * np.conj(other.channels[degrees])) @ self.grid.volume_weights

        return complex(np.sum(4 * np.pi / (2 * degrees + 1) * products))

    def multiply(self, multiplier: ComplexArray) -> "SpectralField":
        """Pointwise product with m(k_j); the same symbol acts on every channel."""
        return SpectralField(self.channels * np.asarray(multiplier)[None, :], self.grid, self.dropped_mass)

    def conj(self) -> "SpectralField":
        return SpectralField(np.conj(self.channels), self.grid, self.dropped_mass)

    def _validate_compatible(self, other: "SpectralField") -> None:
        if other.grid != self.grid:
            raise ShapeMismatchError(f"Spectral fields live on different momentum grids: {self.grid} vs {other.grid}")

    def __add__(self, other: "SpectralField") -> "SpectralField":
        self._validate_compatible(other)

        if other.l_max != self.l_max:
            raise ShapeMismatchError(f"Channel counts differ: {self.l_max + 1} vs {other.l_max + 1}")

        return SpectralField(self.channels + other.channels, self.grid, self.dropped_mass + other.dropped_mass)

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        return self + (-other)

    def __neg__(self) -> "SpectralField":
        return SpectralField(-self.channels, self.grid, self.dropped_mass)

    def __mul__(self, scalar: Scalar) -> "SpectralField":
        return SpectralField(scalar * self.channels, self.grid, self.dropped_mass)

    __rmul__ = __mul__
