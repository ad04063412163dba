import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import RangeError
from grids.angular_quadrature import default_angular_nodes, get_angular_quadrature
from grids.field_algebra import inner_product
from scattering.distorted_plane_wave import distorted_plane_wave
from transform.distorted_fourier_transform import forward


def test_free_plane_wave_is_the_rayleigh_expansion(free_table, radial_grid):
    wave = distorted_plane_wave(free_table, 1.0, l_max=16)
    quadrature = get_angular_quadrature(default_angular_nodes(16))
    expected = np.exp(1j * radial_grid.nodes[None, :] * quadrature.nodes[:, None])
    inside = radial_grid.nodes <= 6

    assert np.max(np.abs(wave.to_collocation(quadrature) - expected)[:, inside]) <= 1e-4


def test_forward_transform_pairs_against_the_plane_wave(gaussian_table, mixed_field):
    index = gaussian_table.momentum_index(2.0)
    wave = distorted_plane_wave(gaussian_table, 2.0)
    direct = (2 * np.pi) ** -1.5 * inner_product(mixed_field, wave)

    assert np.sum(forward(mixed_field, gaussian_table).channels[:, index]) == pytest.approx(direct, rel=1e-10)


def test_missing_channels_are_solved_on_demand(gaussian_table):
    tabulated = distorted_plane_wave(gaussian_table, 1.0)
    extended = distorted_plane_wave(gaussian_table, 1.0, l_max=3)

    assert_allclose(extended.channels[:3], tabulated.channels, atol=1e-14)
    assert np.all(np.isfinite(extended.channels[3]))
    assert np.max(np.abs(extended.channels[3])) > 0


def test_momentum_must_lie_on_the_grid(gaussian_table):
    with pytest.raises(RangeError):
        distorted_plane_wave(gaussian_table, 100.0)
