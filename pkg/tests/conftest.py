import numpy as np
import pytest

from grids.axisymmetric_field import AxisymmetricField
from grids.grid_factory import make_grids
from models.potential_form import PotentialForm
from scattering.potential import Potential
from scattering.scattering_table_builder import build_free_table, build_scattering_table
from transform.field_families import gaussian_profile
from waveop.wave_operator_tables import WaveOperatorTables

TEST_R_MAX = 20.0
TEST_N_R = 400
TEST_K_MAX = 8.0
TEST_N_K = 64
TEST_L_MAX = 2


@pytest.fixture(scope='session')
def grids():
    return make_grids(TEST_R_MAX, TEST_N_R, TEST_K_MAX, TEST_N_K)


@pytest.fixture(scope='session')
def radial_grid(grids):
    return grids[0]


@pytest.fixture(scope='session')
def momentum_grid(grids):
    return grids[1]


@pytest.fixture(scope='session')
def free_table(radial_grid, momentum_grid):
    return build_free_table(radial_grid, momentum_grid, TEST_L_MAX)


@pytest.fixture(scope='session')
def gaussian_potential():
    return Potential(form=PotentialForm.GAUSSIAN, amplitude=1.0, width=1.0)


@pytest.fixture(scope='session')
def gaussian_table(gaussian_potential, radial_grid, momentum_grid):
    return build_scattering_table(gaussian_potential, radial_grid, momentum_grid, TEST_L_MAX)


@pytest.fixture(scope='session')
def free_tables(free_table):
    return WaveOperatorTables(distorted=free_table, flat=free_table)


@pytest.fixture(scope='session')
def gaussian_tables(gaussian_table, free_table):
    return WaveOperatorTables(distorted=gaussian_table, flat=free_table)


@pytest.fixture
def gaussian_field(radial_grid):
    return AxisymmetricField.from_radial(radial_grid, gaussian_profile(1.0))


@pytest.fixture
def dipole_field(radial_grid):
    """x₃·e^{−|x|²/2}."""
    return AxisymmetricField.from_radial(radial_grid, gaussian_profile(1.0, 1), l=1)


@pytest.fixture
def mixed_field(radial_grid):
    field = AxisymmetricField.zeros(radial_grid, TEST_L_MAX)
    field.channels[0] = (1 + 0.5j) * gaussian_profile(1.2)(radial_grid.nodes)
    field.channels[1] = 0.3 * gaussian_profile(0.9, 1)(radial_grid.nodes)
    field.channels[2] = -0.2j * gaussian_profile(1.1, 2)(radial_grid.nodes)

    return field


@pytest.fixture
def rng():
    return np.random.default_rng(0)
