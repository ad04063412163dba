import numpy as np
import pytest

from exceptions import ConfigurationError
from models.potential_form import PotentialForm
from scattering.potential import Potential, decay_constant, hardy_condition


def test_free_potential_vanishes(radial_grid):
    free = Potential.free()

    assert free.is_zero
    assert free.support_radius == 0.0
    assert not np.any(free(radial_grid.nodes))


@pytest.mark.parametrize('form, expected', [
    (PotentialForm.GAUSSIAN, np.sqrt(np.log(1e14))),
    (PotentialForm.EXPONENTIAL, np.log(1e14)),
    (PotentialForm.SPHERICAL_WELL, 1.0)
])
def test_support_radius(form, expected):
    assert Potential(form=form, amplitude=1.0).support_radius == pytest.approx(expected)


def test_spherical_well_has_a_breakpoint_at_its_edge():
    well = Potential(form=PotentialForm.SPHERICAL_WELL, amplitude=-1.0, width=1.5)

    assert well.breakpoints == (1.5,)
    assert well(np.array([1.0, 2.0])).tolist() == [-1.0, 0.0]
    assert not well.is_repulsive


def test_tabulated_potential_interpolates_and_vanishes_outside():
    table = Potential(
        form=PotentialForm.TABLE,
        amplitude=2.0,
        table_radii=(0.0, 1.0, 2.0),
        table_profile=(1.0, 0.5, 0.0)
    )

    assert table(np.array([0.5, 1.5, 3.0])).tolist() == pytest.approx([1.5, 0.5, 0.0])
    assert table.support_radius == 2.0


@pytest.mark.parametrize('radii, profile', [
    ((0.0, 1.0), (1.0, 0.5)),
    ((0.0, 1.0, 1.0), (1.0, 0.5, 0.0)),
    ((0.0, 1.0, 2.0), (2.0, 0.5, 0.0)),
    ((0.0, 1.0), (1.0, 0.5, 0.0)),
    (None, (1.0, 0.0))
])
def test_invalid_tables_are_rejected(radii, profile):
    with pytest.raises(ConfigurationError):
        Potential(form=PotentialForm.TABLE, amplitude=1.0, table_radii=radii, table_profile=profile)


@pytest.mark.parametrize('amplitude, width', [(float('inf'), 1.0), (1.0, 0.0), (1.0, -2.0)])
def test_invalid_scalars_are_rejected(amplitude, width):
    with pytest.raises(ConfigurationError):
        Potential(form=PotentialForm.GAUSSIAN, amplitude=amplitude, width=width)


def test_hardy_condition_separates_repulsive_and_deep_attractive(radial_grid, gaussian_potential):
    deep = Potential(form=PotentialForm.GAUSSIAN, amplitude=-10.0)

    assert hardy_condition(gaussian_potential, radial_grid)
    assert not hardy_condition(deep, radial_grid)


def test_decay_constant_is_finite_and_positive(radial_grid, gaussian_potential):
    constant = decay_constant(gaussian_potential, radial_grid)

    assert np.isfinite(constant)
    assert constant >= 1.0
