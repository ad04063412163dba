from typing import Optional

import numpy as np
from tqdm import tqdm

from consts.path_consts import SCATTERING_TABLES_CACHE_DIR
from exceptions import ConfigurationError, NumericError
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from scattering.potential import Potential
from scattering.radial_solver import RadialSolver
from scattering.scattering_table import ScatteringTable
from scattering.spectrum_checker import SpectrumChecker
from tools.array_cache import ArrayCache
from tools.content_hasher import ContentHasher
from tools.logging import logger


class ScatteringTableBuilder:
    def __init__(self,
                 spectrum_checker: Optional[SpectrumChecker] = None,
                 cache: Optional[ArrayCache] = None,
                 hasher: Optional[ContentHasher] = None):
        self._spectrum_checker = spectrum_checker or SpectrumChecker()
        self._cache = cache
        self._hasher = hasher or ContentHasher()

    def build(self,
              potential: Potential,
              radial_grid: RadialGrid,
              momentum_grid: MomentumGrid,
              l_max: int,
              unsafe: bool = False) -> ScatteringTable:
        if not potential.is_zero and not unsafe:
            self._validate_spectrum(potential, radial_grid)

        key = self._hasher.hash(potential, radial_grid, momentum_grid, l_max)
        cached = self._cache.load(key) if self._cache is not None else None

        if cached is not None:
            return self._to_table(potential, radial_grid, momentum_grid, cached)

        arrays = self._solve_channels(potential, radial_grid, momentum_grid, l_max)

        if self._cache is not None:
            self._cache.save(key, arrays)

        return self._to_table(potential, radial_grid, momentum_grid, arrays)

    def _validate_spectrum(self, potential: Potential, radial_grid: RadialGrid) -> None:
        report = self._spectrum_checker.check(potential, radial_grid)

        if not (report.h2_ok and report.generic_ok):
            raise ConfigurationError(
                f"Potential {potential} fails the spectral assumptions (bound states per l: "
                f"{report.bound_state_count_per_l}, resonance score {report.resonance_score:.3g}); "
                f"build with `unsafe=True` to override"
            )

    @staticmethod
    def _solve_channels(potential: Potential,
                        radial_grid: RadialGrid,
                        momentum_grid: MomentumGrid,
                        l_max: int) -> dict:
        logger.info(f"Starting to solve {l_max + 1} partial waves on {momentum_grid.n_k} momenta")
        solver = RadialSolver(potential, radial_grid)
        solutions, phase_shifts, residuals = [], [], []

        with tqdm(total=l_max + 1) as progress_bar:
            for l in range(l_max + 1):
                try:
                    channel = solver.solve_channel(l, momentum_grid.nodes)
                except (ConfigurationError, NumericError) as e:
                    raise type(e)(f"While solving channel l={l}: {e}") from e

                solutions.append(channel.solutions)
                phase_shifts.append(channel.phase_shifts)
                residuals.append(channel.matching_residuals)
                progress_bar.update(1)

        return {
            'solutions': np.array(solutions),
            'phase_shifts': np.array(phase_shifts),
            'matching_residuals': np.array(residuals)
        }

    @staticmethod
    def _to_table(potential: Potential,
                  radial_grid: RadialGrid,
                  momentum_grid: MomentumGrid,
                  arrays: dict) -> ScatteringTable:
        phase_shifts = arrays['phase_shifts']
        unwrapped = np.unwrap(phase_shifts[:, ::-1], period=np.pi, axis=1)[:, ::-1]

        return ScatteringTable(
            potential=potential,
            radial_grid=radial_grid,
            momentum_grid=momentum_grid,
            solutions=arrays['solutions'],
            phase_shifts=phase_shifts,
            unwrapped_phase_shifts=unwrapped,
            matching_residuals=arrays['matching_residuals']
        )


def build_scattering_table(potential: Potential,
                           radial_grid: RadialGrid,
                           momentum_grid: MomentumGrid,
                           l_max: int,
                           unsafe: bool = False) -> ScatteringTable:
    return ScatteringTableBuilder().build(potential, radial_grid, momentum_grid, l_max, unsafe)


def build_free_table(radial_grid: RadialGrid, momentum_grid: MomentumGrid, l_max: int) -> ScatteringTable:
    return build_scattering_table(Potential.free(), radial_grid, momentum_grid, l_max)
