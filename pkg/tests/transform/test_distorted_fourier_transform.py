import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import inner_product, l2_norm
from grids.momentum_grid import MomentumGrid
from grids.spectral_field import SpectralField
from scattering.hamiltonian import apply_hamiltonian
from transform.distorted_fourier_transform import flat_forward, flat_inverse, forward, inverse
from transform.field_families import random_field_family
from transform.multiplier_operators import apply_multiplier
from transform.multiplier_spec import MultiplierSpec


def test_flat_transform_of_gaussian_is_gaussian(gaussian_field, momentum_grid):
    spectral = flat_forward(gaussian_field, momentum_grid)
    assert_allclose(spectral.channels[0], np.exp(-momentum_grid.nodes ** 2 / 2), atol=1e-10)


def test_flat_transform_of_dipole_carries_minus_i(dipole_field, momentum_grid):
    k = momentum_grid.nodes
    spectral = flat_forward(dipole_field, momentum_grid)

    assert_allclose(spectral.channels[1], -1j * k * np.exp(-k ** 2 / 2), atol=1e-10)


@pytest.mark.parametrize('table_name, tolerance', [('free_table', 1e-9), ('gaussian_table', 1e-6)])
def test_plancherel(request, table_name, tolerance, mixed_field):
    table = request.getfixturevalue(table_name)
    spectral = forward(mixed_field, table)

    assert abs(spectral.norm() ** 2 - mixed_field.mass()) / mixed_field.mass() <= tolerance


@pytest.mark.parametrize('table_name, tolerance', [('free_table', 1e-9), ('gaussian_table', 1e-6)])
def test_inversion(request, table_name, tolerance, mixed_field):
    table = request.getfixturevalue(table_name)
    restored = inverse(forward(mixed_field, table), table)

    assert l2_norm(restored - mixed_field) <= tolerance * l2_norm(mixed_field)


def test_inner_products_are_preserved(gaussian_table, radial_grid):
    first, second = random_field_family(radial_grid, 2, seed=3, l_max=2)
    spectral = forward(first, gaussian_table).inner_product(forward(second, gaussian_table))

    assert abs(spectral - inner_product(first, second)) <= 1e-6 * l2_norm(first) * l2_norm(second)


def test_transform_diagonalizes_the_hamiltonian(gaussian_table, gaussian_potential, mixed_field):
    spectral_side = apply_multiplier(mixed_field, MultiplierSpec(symbol=lambda k: k ** 2), gaussian_table)
    physical_side = apply_hamiltonian(mixed_field, gaussian_potential)

    assert l2_norm(spectral_side - physical_side) <= 1e-4 * l2_norm(physical_side)


def test_flat_round_trip_through_module_helpers(mixed_field, radial_grid, momentum_grid):
    restored = flat_inverse(flat_forward(mixed_field, momentum_grid), radial_grid)
    assert l2_norm(restored - mixed_field) <= 1e-9 * l2_norm(mixed_field)


def test_forward_rejects_more_channels_than_the_table(free_table, radial_grid):
    with pytest.raises(ShapeMismatchError):
        forward(AxisymmetricField.zeros(radial_grid, free_table.l_max + 1), free_table)


def test_inverse_rejects_foreign_momentum_grids(free_table):
    with pytest.raises(ShapeMismatchError):
        inverse(SpectralField.zeros(MomentumGrid(4.0, 32), 0), free_table)
