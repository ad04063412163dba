import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import ShapeMismatchError
from grids.angular_quadrature import get_angular_quadrature
from grids.axisymmetric_field import AxisymmetricField
from grids.grid_factory import make_grids


def test_field_rejects_wrong_radial_sample_count(radial_grid):
    with pytest.raises(ShapeMismatchError):
        AxisymmetricField(np.zeros((1, radial_grid.n_r + 1)), radial_grid)


def test_gaussian_mass_matches_closed_form(gaussian_field):
    assert gaussian_field.mass() == pytest.approx(np.pi ** 1.5, rel=1e-10)


def test_channel_masses_carry_legendre_normalization(dipole_field):
    masses = dipole_field.channel_masses()

    assert masses[0] == 0
    assert masses[1] == pytest.approx(np.pi ** 1.5 / 2, rel=1e-10)


def test_truncation_records_dropped_mass(mixed_field):
    truncated = mixed_field.with_l_max(0)

    assert truncated.l_max == 0
    assert truncated.dropped_mass == pytest.approx(mixed_field.channel_masses()[1:].sum())
    assert truncated.mass() + truncated.dropped_mass == pytest.approx(mixed_field.mass())


def test_padding_keeps_channels(mixed_field):
    padded = mixed_field.with_l_max(4)

    assert padded.l_max == 4
    assert_allclose(padded.channels[:3], mixed_field.channels)
    assert not np.any(padded.channels[3:])


def test_collocation_projects_back_onto_channels(mixed_field):
    quadrature = get_angular_quadrature(8)
    values = mixed_field.to_collocation(quadrature)
    restored = AxisymmetricField.from_collocation(values, mixed_field.grid, mixed_field.l_max, quadrature)

    assert_allclose(restored.channels, mixed_field.channels, atol=1e-13)


def test_arithmetic_aligns_channel_counts(gaussian_field, dipole_field):
    total = gaussian_field + dipole_field

    assert total.l_max == 1
    assert_allclose(total.channels[0], gaussian_field.channels[0])
    assert_allclose((total - dipole_field).channels[1], 0)
    assert_allclose((2 * gaussian_field).channels, 2 * gaussian_field.channels)


def test_arithmetic_rejects_different_grids(gaussian_field):
    other_grid, _ = make_grids(10.0, 200, 8.0, 64)

    with pytest.raises(ShapeMismatchError):
        gaussian_field + AxisymmetricField.zeros(other_grid, 0)


def test_tail_mass_detects_box_limited_fields(radial_grid):
    centred = AxisymmetricField.from_radial(radial_grid, lambda r: np.exp(-r ** 2))
    edge = AxisymmetricField.from_radial(radial_grid, lambda r: np.exp(-(r - radial_grid.r_max) ** 2))

    assert centred.tail_mass() < 1e-30
    assert edge.tail_mass() > 0.5
