from functools import lru_cache

from consts.path_consts import SCATTERING_TABLES_CACHE_DIR, M_KERNELS_CACHE_DIR
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from pseudoproduct.m_kernel import MKernel, MKernelBuilder
from scattering.potential import Potential
from scattering.scattering_table import ScatteringTable
from scattering.scattering_table_builder import ScatteringTableBuilder
from tools.array_cache import ArrayCache
from waveop.wave_operator_tables import WaveOperatorTables


class ComponentFactory:
    @staticmethod
    @lru_cache
    def get_scattering_tables_cache() -> ArrayCache:
        return ArrayCache(SCATTERING_TABLES_CACHE_DIR)

    @staticmethod
    @lru_cache
    def get_m_kernels_cache() -> ArrayCache:
        return ArrayCache(M_KERNELS_CACHE_DIR)

    @staticmethod
    @lru_cache
    def get_scattering_table_builder() -> ScatteringTableBuilder:
        return ScatteringTableBuilder(cache=ComponentFactory.get_scattering_tables_cache())

    @staticmethod
    @lru_cache(maxsize=8)
    def get_scattering_table(potential: Potential,
                             radial_grid: RadialGrid,
                             momentum_grid: MomentumGrid,
                             l_max: int,
                             unsafe: bool = False) -> ScatteringTable:
        builder = ComponentFactory.get_scattering_table_builder()
        return builder.build(potential, radial_grid, momentum_grid, l_max, unsafe)

    @staticmethod
    def get_free_table(radial_grid: RadialGrid, momentum_grid: MomentumGrid, l_max: int) -> ScatteringTable:
        return ComponentFactory.get_scattering_table(Potential.free(), radial_grid, momentum_grid, l_max)

    @staticmethod
    @lru_cache(maxsize=4)
    def get_wave_operator_tables(potential: Potential,
                                 radial_grid: RadialGrid,
                                 momentum_grid: MomentumGrid,
                                 l_max: int,
                                 unsafe: bool = False) -> WaveOperatorTables:
        return WaveOperatorTables(
            distorted=ComponentFactory.get_scattering_table(potential, radial_grid, momentum_grid, l_max, unsafe),
            flat=ComponentFactory.get_free_table(radial_grid, momentum_grid, l_max)
        )

    @staticmethod
    @lru_cache(maxsize=2)
    def get_m_kernel(potential: Potential,
                     radial_grid: RadialGrid,
                     momentum_grid: MomentumGrid,
                     unsafe: bool = False) -> MKernel:
        table = ComponentFactory.get_scattering_table(potential, radial_grid, momentum_grid, 0, unsafe)
        return MKernelBuilder(cache=ComponentFactory.get_m_kernels_cache()).build(table)
