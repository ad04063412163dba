import numpy as np
import pytest

from consts.nls_consts import TIME, L2_NORM, DUHAMEL_RESIDUAL
from exceptions import BoundaryContaminationError, ConfigurationError, DomainError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm
from nls.duhamel import duhamel_residual_physical
from nls.evolution import evolve
from nls.scattering_defect import scattering_defect
from transform.field_families import gaussian_profile


@pytest.fixture(scope='module')
def linear_trajectory(radial_grid, free_tables):
    u0 = AxisymmetricField.from_radial(radial_grid, gaussian_profile(1.0))
    return evolve(u0, 1.0, 0.1, free_tables, 0.1, nonlinear=False)


def test_snapshots_are_taken_at_every_stride(linear_trajectory):
    np.testing.assert_allclose(linear_trajectory.times, np.linspace(0, 1, 11), atol=1e-12)
    assert linear_trajectory.valid


def test_linear_evolution_conserves_mass(linear_trajectory):
    norms = [l2_norm(u) for u in linear_trajectory.snapshots]
    assert max(norms) - min(norms) <= 1e-6 * norms[0]


def test_linear_profiles_do_not_move(linear_trajectory):
    report = scattering_defect(linear_trajectory)

    assert report.profile_defect <= 1e-7
    assert report.drift <= 1e-7


def test_linear_trajectory_has_no_duhamel_residual(linear_trajectory, free_table):
    report = duhamel_residual_physical(linear_trajectory, free_table)

    assert report.residual <= 1e-7
    assert not report.inconclusive


def test_trajectory_frame(linear_trajectory):
    frame = linear_trajectory.to_frame()

    assert len(frame) == 11
    assert {TIME, L2_NORM, DUHAMEL_RESIDUAL} <= set(frame.columns)
    assert frame[L2_NORM].iloc[0] == pytest.approx(np.pi ** 0.75, rel=1e-10)


def test_snapshot_stride_must_be_a_multiple_of_the_step(free_tables, gaussian_field):
    with pytest.raises(ConfigurationError):
        evolve(gaussian_field, 1.0, 0.1, free_tables, 0.15)


def test_final_time_must_be_non_negative(free_tables, gaussian_field):
    with pytest.raises(DomainError):
        evolve(gaussian_field, -1.0, 0.1, free_tables, 0.1)


def test_data_near_the_edge_of_the_box_abort_the_run(radial_grid, free_tables):
    edge = AxisymmetricField.from_radial(radial_grid, lambda r: np.exp(-(r - 19.0) ** 2))

    with pytest.raises(BoundaryContaminationError) as error:
        evolve(edge, 1.0, 0.1, free_tables, 0.5, nonlinear=False)

    assert error.value.time == 0
