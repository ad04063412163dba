from dataclasses import dataclass
from itertools import permutations
from typing import Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

from consts.path_consts import M_KERNELS_CACHE_DIR
from consts.pseudoproduct_consts import M_KERNEL_NORMALIZATION_POWER, M_KERNEL_MEMORY_BUDGET, \
    M_KERNEL_TAPER_START, TRIANGLE_INTERIOR_DISTANCE, FIRST_MOMENTUM, SECOND_MOMENTUM, THIRD_MOMENTUM, \
    KERNEL_REAL, KERNEL_IMAGINARY
from consts.typing_consts import ComplexArray, RealArray
from exceptions import BudgetExceededError, RangeError, ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from scattering.scattering_table import ScatteringTable
from tools.array_cache import ArrayCache
from tools.content_hasher import ContentHasher
from tools.logging import logger
from transform.bumps import septic_smoothstep
from transform.distorted_fourier_transform import get_transform

M_KERNEL_NORMALIZATION = (2 / np.pi) ** M_KERNEL_NORMALIZATION_POWER


@dataclass(eq=False)
class MKernel:
    """
    M(k₁, k₂, k₃) = c ∫ E₀(k₁, r)E₀(k₂, r)E₀(k₃, r) τ(r) r² dr with E₀ = e^{iδ₀}u₀/(kr), c = (2/π)^{3/2} and τ a
    C³ taper equal to 1 up to `taper_start`. With this constant ∫ f g h dx = 4π ∑ M·(k²f♯)(k²g♯)(k²h♯)·weights for
    radial data.
    """
    values: ComplexArray
    momentum_grid: MomentumGrid
    normalization: float
    taper_start: float

    def contract(self, first: ComplexArray, second: ComplexArray, third: ComplexArray) -> complex:
        weights = self.momentum_grid.volume_weights
        return complex(4 * np.pi * np.einsum(
            'ijl,i,j,l->', self.values, weights * first, weights * second, weights * third, optimize=True
        ))

    def symmetry_defect(self) -> float:
        worst = 0.0

        for order in permutations(range(3)):
            permuted = np.transpose(self.values, order)

            for index in range(self.values.shape[0]):
                worst = max(worst, float(np.max(np.abs(self.values[index] - permuted[index]))))

        return worst

    def slice_frame(self, k3: float) -> pd.DataFrame:
        if not self.momentum_grid.contains(k3):
            raise RangeError(f"k₃ = {k3} lies outside the momentum grid")

        index = int(np.argmin(np.abs(self.momentum_grid.nodes - k3)))
        first, second = np.meshgrid(self.momentum_grid.nodes, self.momentum_grid.nodes, indexing='ij')
        values = self.values[:, :, index]

        return pd.DataFrame({
            FIRST_MOMENTUM: first.ravel(),
            SECOND_MOMENTUM: second.ravel(),
            THIRD_MOMENTUM: self.momentum_grid.nodes[index],
            KERNEL_REAL: values.real.ravel(),
            KERNEL_IMAGINARY: values.imag.ravel()
        })


class MKernelBuilder:
    def __init__(self,
                 cache: Optional[ArrayCache] = None,
                 hasher: Optional[ContentHasher] = None,
                 memory_budget: int = M_KERNEL_MEMORY_BUDGET):
        self._cache = cache
        self._hasher = hasher or ContentHasher()
        self._memory_budget = memory_budget

    def build(self, table: ScatteringTable) -> MKernel:
        momentum_grid, radial_grid = table.momentum_grid, table.radial_grid
        self._validate_memory(momentum_grid.n_k)
        taper_start = M_KERNEL_TAPER_START * radial_grid.r_max
        key = self._hasher.hash('m_kernel', table.potential, radial_grid, momentum_grid)
        cached = self._cache.load(key) if self._cache is not None else None

        if cached is not None:
            values = cached['values']
        else:
            values = self._integrate(table, taper_start)

            if self._cache is not None:
                self._cache.save(key, {'values': values})

        return MKernel(values, momentum_grid, M_KERNEL_NORMALIZATION, taper_start)

    def _validate_memory(self, n_k: int) -> None:
        required = n_k ** 3 * np.dtype(np.complex128).itemsize

        if required > self._memory_budget:
            affordable = int((self._memory_budget / np.dtype(np.complex128).itemsize) ** (1 / 3))
            raise BudgetExceededError(
                f"The M kernel on {n_k} momenta needs {required / 2 ** 20:.0f} MiB, over the "
                f"{self._memory_budget / 2 ** 20:.0f} MiB budget; use a coarse momentum grid with n_k ≤ {affordable}"
            )

    @staticmethod
    def _integrate(table: ScatteringTable, taper_start: float) -> ComplexArray:
        logger.info(f"Starting to integrate the M kernel on {table.momentum_grid.n_k}³ momenta")
        eigenfunctions = table.eigenfunctions(0)
        weights = table.radial_grid.volume_weights * radial_taper(table.radial_grid, taper_start)
        n_k = table.momentum_grid.n_k
        values = np.empty((n_k, n_k, n_k), dtype=np.complex128)

        with tqdm(total=n_k) as progress_bar:
            for index in range(n_k):
                values[index] = (eigenfunctions * (eigenfunctions[index] * weights)) @ eigenfunctions.T
                progress_bar.update(1)

        phases = np.exp(1j * table.phase_shifts[0])
        values *= M_KERNEL_NORMALIZATION * phases[:, None, None] * phases[None, :, None] * phases[None, None, :]

        return values


def radial_taper(radial_grid: RadialGrid, start: float) -> RealArray:
    return 1.0 - septic_smoothstep((radial_grid.nodes - start) / (radial_grid.r_max - start))


def build_m_kernel(table: ScatteringTable, cache_dir: Optional[str] = M_KERNELS_CACHE_DIR) -> MKernel:
    cache = ArrayCache(cache_dir) if cache_dir is not None else None
    return MKernelBuilder(cache=cache).build(table)


def m_kernel_lambda(f: AxisymmetricField,
                    g: AxisymmetricField,
                    h: AxisymmetricField,
                    kernel: MKernel,
                    table: ScatteringTable) -> complex:
    """∫ f g h dx for radial fields through the kernel contraction."""
    if kernel.momentum_grid != table.momentum_grid:
        raise ShapeMismatchError(f"Kernel grid {kernel.momentum_grid} does not match {table.momentum_grid}")

    transform = get_transform(table)
    channels = [transform.forward(field.with_l_max(0)).channels[0] for field in (f, g, h)]

    return kernel.contract(*channels)


def triangle_kernel(k1: RealArray, k2: RealArray, k3: RealArray) -> RealArray:
    """V = 0 value c·∫ sin(k₁r)sin(k₂r)sin(k₃r) dr/(k₁k₂k₃ r) = c·π/(4k₁k₂k₃) inside the triangle, 0 outside."""
    inside = (np.abs(k1 - k2) < k3) & (k3 < k1 + k2)
    boundary = np.isclose(k3, np.abs(k1 - k2)) | np.isclose(k3, k1 + k2)
    scale = M_KERNEL_NORMALIZATION * np.pi / (4 * k1 * k2 * k3)

    return np.where(boundary, scale / 2, np.where(inside, scale, 0.0))


def triangle_oracle_defect(kernel: MKernel, distance: float = TRIANGLE_INTERIOR_DISTANCE) -> float:
    """
    Largest deviation from the triangle kernel, relative to c·π/(4k₁k₂k₃), at least `distance` off its edges.
    The error is set by the radial taper, whose length scales with r_max: the 1e-3 tolerance needs
    r_max ≥ TRIANGLE_ORACLE_MIN_R_MAX at the default distance, and r_max = 20 stays near 6e-3.
    """
    nodes = kernel.momentum_grid.nodes
    second, third = np.meshgrid(nodes, nodes, indexing='ij')
    worst = 0.0

    for index, first in enumerate(nodes):
        away = (np.abs(third - np.abs(first - second)) >= distance) & (np.abs(first + second - third) >= distance)

        if not np.any(away):
            continue

        scale = M_KERNEL_NORMALIZATION * np.pi / (4 * first * second * third)
        oracle = triangle_kernel(first, second, third)
        deviation = np.abs(kernel.values[index] - oracle) / scale
        worst = max(worst, float(np.max(deviation[away])))

    return worst
