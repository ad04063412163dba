import pytest

from consts.nls_consts import SPECTRAL_DISCREPANCY_TOLERANCE
from exceptions import ConfigurationError, ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.momentum_grid import MomentumGrid
from nls.duhamel import coarse_grids, duhamel_residual_spectral
from nls.evolution import evolve
from pseudoproduct.m_kernel import MKernelBuilder
from scattering.scattering_table_builder import build_free_table
from transform.field_families import gaussian_profile


@pytest.fixture(scope='module')
def nonlinear_trajectory(radial_grid, free_tables):
    u0 = AxisymmetricField.from_radial(radial_grid, lambda r: 0.05 * gaussian_profile(1.0)(r))
    return evolve(u0, 1.0, 0.05, free_tables, 0.1)


@pytest.fixture(scope='module')
def coarse_table(radial_grid):
    return build_free_table(*coarse_grids(radial_grid), 0)


@pytest.fixture(scope='module')
def coarse_kernel(coarse_table):
    return MKernelBuilder().build(coarse_table)


def test_coarse_grids_keep_the_radial_spacing(radial_grid):
    coarse_radial, coarse_momentum = coarse_grids(radial_grid, r_max=10.0)

    assert coarse_radial.spacing == pytest.approx(radial_grid.spacing)
    assert coarse_radial.r_max == pytest.approx(10.0)
    assert coarse_momentum.n_k == 32

    with pytest.raises(ConfigurationError):
        coarse_grids(radial_grid, r_max=40.0)


def test_kernel_realized_duhamel_integral_matches_the_physical_one(nonlinear_trajectory, coarse_kernel, coarse_table):
    report = duhamel_residual_spectral(nonlinear_trajectory, coarse_kernel, coarse_table)

    assert report.times == pytest.approx([0.1 * index for index in range(11)])
    assert report.discrepancies[0] == 0
    assert report.discrepancy <= SPECTRAL_DISCREPANCY_TOLERANCE


def test_spectral_duhamel_needs_three_snapshots(nonlinear_trajectory, coarse_kernel, coarse_table):
    with pytest.raises(ConfigurationError):
        duhamel_residual_spectral(nonlinear_trajectory, coarse_kernel, coarse_table, match_time=0.1)


def test_spectral_duhamel_rejects_a_foreign_kernel(nonlinear_trajectory, coarse_kernel, radial_grid):
    other_table = build_free_table(radial_grid, MomentumGrid(4.0, 40), 0)

    with pytest.raises(ShapeMismatchError):
        duhamel_residual_spectral(nonlinear_trajectory, coarse_kernel, other_table)
