import pytest

from models.potential_form import PotentialForm
from scattering.potential import Potential
from scattering.spectrum_checker import check_spectrum


def test_repulsive_gaussian_passes_every_spectral_check(gaussian_potential, radial_grid):
    report = check_spectrum(gaussian_potential, radial_grid)

    assert report.bound_state_count_per_l == [0, 0, 0]
    assert report.h2_ok
    assert report.generic_ok
    assert report.hardy_ok


def test_deep_well_has_one_s_wave_bound_state(radial_grid):
    deep_well = Potential(form=PotentialForm.SPHERICAL_WELL, amplitude=-9.0, width=1.0)
    report = check_spectrum(deep_well, radial_grid)

    assert report.bound_state_count_per_l == [1, 0, 0]
    assert not report.h2_ok
    assert not report.hardy_ok


@pytest.mark.parametrize('depth', [0.5, 1.0, 2.0])
def test_shallow_wells_are_generic(radial_grid, depth):
    well = Potential(form=PotentialForm.SPHERICAL_WELL, amplitude=-depth, width=1.0)
    report = check_spectrum(well, radial_grid, l_max=0)

    assert report.h2_ok
    assert report.generic_ok


def test_report_serializes_to_json(gaussian_potential, radial_grid):
    report = check_spectrum(gaussian_potential, radial_grid)
    assert type(report).from_json(report.to_json()) == report
