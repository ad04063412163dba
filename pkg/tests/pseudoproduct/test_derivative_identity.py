import pytest

from exceptions import ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from pseudoproduct.derivative_identity import derivative_identity
from scattering.scattering_table_builder import build_free_table
from transform.field_families import gaussian_profile
from waveop.wave_operator_tables import WaveOperatorTables


@pytest.fixture
def wide_field(radial_grid):
    return AxisymmetricField.from_radial(radial_grid, gaussian_profile(1.3))


def test_identity_is_exact_without_a_potential(free_tables, gaussian_field, wide_field, mixed_field):
    report = derivative_identity(gaussian_field, wide_field, mixed_field, free_tables)

    assert report.defect <= 1e-10
    assert not report.inconclusive


def test_identity_holds_for_a_gaussian_potential(gaussian_tables, gaussian_field, wide_field, mixed_field):
    report = derivative_identity(gaussian_field, wide_field, mixed_field, gaussian_tables)

    assert report.defect <= 1e-3
    assert abs(report.lhs) > 0


def test_identity_needs_a_first_channel(radial_grid, momentum_grid, gaussian_field):
    radial_table = build_free_table(radial_grid, momentum_grid, 0)
    tables = WaveOperatorTables(distorted=radial_table, flat=radial_table)

    with pytest.raises(ShapeMismatchError):
        derivative_identity(gaussian_field, gaussian_field, gaussian_field, tables)
