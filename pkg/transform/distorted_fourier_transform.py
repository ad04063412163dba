from functools import lru_cache
from typing import Dict

import numpy as np

from consts.typing_consts import ComplexArray, RealArray
from exceptions import ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from grids.spectral_field import SpectralField
from scattering.scattering_table import ScatteringTable
from scattering.scattering_table_builder import build_free_table

_NORMALIZATION = np.sqrt(2 / np.pi)


class DistortedFourierTransform:
    """
    f♯_l(k) = (−i)^l e^{−iδ_l(k)} √(2/π) ∫ E_l(k, r) f_l(r) r² dr with E_l = u_l/(kr), and the adjoint quadrature
    f_l(r) = i^l √(2/π) ∫ e^{iδ_l(k)} E_l(k, r) f♯_l(k) k² dk as its inverse. Each channel is one real dense
    matrix applied to the real and imaginary parts together.
    """

    def __init__(self, table: ScatteringTable):
        self._table = table
        self._kernels: Dict[int, RealArray] = {}

    @property
    def table(self) -> ScatteringTable:
        return self._table

    @property
    def radial_grid(self) -> RadialGrid:
        return self._table.radial_grid

    @property
    def momentum_grid(self) -> MomentumGrid:
        return self._table.momentum_grid

    def forward(self, f: AxisymmetricField) -> SpectralField:
        self._validate_field(f)
        weighted = f.channels * self.radial_grid.volume_weights[None, :]
        channels = np.empty((f.l_max + 1, self.momentum_grid.n_k), dtype=np.complex128)

        for l in range(f.l_max + 1):
            phase = (-1j) ** l * np.exp(-1j * self._table.phase_shifts[l]) * _NORMALIZATION
            channels[l] = phase * self._apply(self._kernel(l), weighted[l])

        return SpectralField(channels, self.momentum_grid, f.dropped_mass)

    def inverse(self, spectral: SpectralField) -> AxisymmetricField:
        self._validate_spectral(spectral)
        channels = np.empty((spectral.l_max + 1, self.radial_grid.n_r), dtype=np.complex128)

        for l in range(spectral.l_max + 1):
            weighted = spectral.channels[l] * self.momentum_grid.volume_weights * np.exp(1j * self._table.phase_shifts[l])
            channels[l] = 1j ** l * _NORMALIZATION * self._apply(self._kernel(l).T, weighted)

        return AxisymmetricField(channels, self.radial_grid, spectral.dropped_mass)

    def _kernel(self, l: int) -> RealArray:
        if l not in self._kernels:
            self._kernels[l] = self._table.eigenfunctions(l)

        return self._kernels[l]

    @staticmethod
    def _apply(matrix: RealArray, values: ComplexArray) -> ComplexArray:
        stacked = matrix @ np.stack([values.real, values.imag], axis=1)
        return stacked[:, 0] + 1j * stacked[:, 1]

    def _validate_field(self, f: AxisymmetricField) -> None:
        if f.grid != self.radial_grid:
            raise ShapeMismatchError(f"Field grid {f.grid} does not match the table's {self.radial_grid}")

        if f.l_max > self._table.l_max:
            raise ShapeMismatchError(f"Field has L = {f.l_max} but the table only holds L = {self._table.l_max}")

    def _validate_spectral(self, spectral: SpectralField) -> None:
        if spectral.grid != self.momentum_grid:
            raise ShapeMismatchError(f"Spectral grid {spectral.grid} does not match the table's {self.momentum_grid}")

        if spectral.l_max > self._table.l_max:
            raise ShapeMismatchError(f"Spectral field has L = {spectral.l_max}, table holds L = {self._table.l_max}")


@lru_cache(maxsize=8)
def get_transform(table: ScatteringTable) -> DistortedFourierTransform:
    return DistortedFourierTransform(table)


@lru_cache(maxsize=8)
def get_flat_transform(radial_grid: RadialGrid, momentum_grid: MomentumGrid, l_max: int) -> DistortedFourierTransform:
    return DistortedFourierTransform(build_free_table(radial_grid, momentum_grid, l_max))


def forward(f: AxisymmetricField, table: ScatteringTable) -> SpectralField:
    return get_transform(table).forward(f)


def inverse(spectral: SpectralField, table: ScatteringTable) -> AxisymmetricField:
    return get_transform(table).inverse(spectral)


def flat_forward(f: AxisymmetricField, momentum_grid: MomentumGrid) -> SpectralField:
    return get_flat_transform(f.grid, momentum_grid, f.l_max).forward(f)


def flat_inverse(spectral: SpectralField, radial_grid: RadialGrid) -> AxisymmetricField:
    return get_flat_transform(radial_grid, spectral.grid, spectral.l_max).inverse(spectral)
