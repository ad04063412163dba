import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import ConfigurationError, DomainError, RangeError
from models.potential_form import PotentialForm
from scattering.oracles import born_phase_shift, spherical_well_phase_shift
from scattering.potential import Potential
from scattering.radial_solver import solve_radial
from scattering.riccati_bessel import riccati_j
from scattering.scattering_table_builder import build_scattering_table
from scattering.completeness import completeness_defect
from scattering.radiation_defect import radiation_defect
from utils.numeric_utils import wrap_to_half_branch


def test_free_table_holds_riccati_bessel_solutions(free_table, radial_grid, momentum_grid):
    assert free_table.is_free
    assert not np.any(free_table.phase_shifts)

    for l in range(free_table.l_max + 1):
        assert_allclose(free_table.solutions[l], riccati_j(l, np.outer(momentum_grid.nodes, radial_grid.nodes)))


def test_spherical_well_matches_closed_form(radial_grid, momentum_grid):
    well = Potential(form=PotentialForm.SPHERICAL_WELL, amplitude=-1.0, width=1.0)
    table = build_scattering_table(well, radial_grid, momentum_grid, 0)
    expected = spherical_well_phase_shift(1.0, 1.0, momentum_grid.nodes)

    assert np.max(np.abs(wrap_to_half_branch(table.phase_shifts[0] - expected))) <= 1e-6


def test_weak_potential_follows_born_approximation(radial_grid, momentum_grid):
    weak = Potential(form=PotentialForm.GAUSSIAN, amplitude=0.01)
    table = build_scattering_table(weak, radial_grid, momentum_grid, 1)

    for l in range(2):
        born = born_phase_shift(weak, momentum_grid.nodes, l, radial_grid)
        relative = np.max(np.abs(table.phase_shifts[l] - born)) / np.max(np.abs(born))
        assert relative <= 0.05


def test_repulsive_potential_has_negative_phase_shifts(gaussian_table):
    assert np.all(gaussian_table.phase_shifts[0] < 0)
    assert np.all(np.abs(gaussian_table.phase_shifts) <= np.pi / 2)


def test_unwrapped_shifts_differ_by_multiples_of_pi(gaussian_table):
    difference = (gaussian_table.unwrapped_phase_shifts - gaussian_table.phase_shifts) / np.pi

    assert_allclose(difference, np.round(difference), atol=1e-12)
    assert_allclose(gaussian_table.unwrapped_phase_shifts[:, -1], gaussian_table.phase_shifts[:, -1])


def test_bound_states_are_rejected_unless_unsafe(radial_grid, momentum_grid):
    deep_well = Potential(form=PotentialForm.SPHERICAL_WELL, amplitude=-9.0, width=1.0)

    with pytest.raises(ConfigurationError, match='unsafe'):
        build_scattering_table(deep_well, radial_grid, momentum_grid, 0)

    table = build_scattering_table(deep_well, radial_grid, momentum_grid, 0, unsafe=True)
    assert np.all(np.isfinite(table.solutions))


def test_matching_radius_beyond_the_box_is_a_configuration_error(momentum_grid, radial_grid):
    wide = Potential(form=PotentialForm.GAUSSIAN, amplitude=1.0, width=4.0)

    with pytest.raises(ConfigurationError, match='r_max'):
        build_scattering_table(wide, radial_grid, momentum_grid, 0)


def test_momentum_index_range(gaussian_table, momentum_grid):
    assert gaussian_table.momentum_index(momentum_grid.k_max) == momentum_grid.n_k - 1

    with pytest.raises(RangeError):
        gaussian_table.momentum_index(2 * momentum_grid.k_max)


def test_phase_shift_frame_has_one_row_per_channel_and_momentum(gaussian_table, momentum_grid):
    frame = gaussian_table.to_frame()
    assert len(frame) == (gaussian_table.l_max + 1) * momentum_grid.n_k


def test_free_table_is_complete(free_table):
    assert completeness_defect(free_table) <= 1e-8


def test_repulsive_table_is_complete(gaussian_table):
    assert completeness_defect(gaussian_table) <= 1e-6


def test_radiation_defect_decays_outside_the_support(gaussian_table, gaussian_potential):
    radii = [gaussian_potential.support_radius + offset for offset in (2.0, 4.0, 8.0)]
    defects = radiation_defect(gaussian_table, 1.0, radii)

    assert np.all(np.diff(defects) < 0)


def test_radiation_radii_inside_the_support_are_rejected(gaussian_table):
    with pytest.raises(RangeError):
        radiation_defect(gaussian_table, 1.0, [1.0])


@pytest.mark.parametrize('l', [0, 1])
def test_single_momentum_solution_matches_table_row(gaussian_potential, gaussian_table, radial_grid, momentum_grid, l):
    index = 10
    solution, phase_shift = solve_radial(gaussian_potential, momentum_grid.nodes[index], l, radial_grid)

    assert_allclose(solution, gaussian_table.solutions[l][index], atol=1e-9)
    assert abs(wrap_to_half_branch(phase_shift - gaussian_table.phase_shifts[l][index])) <= 1e-9


@pytest.mark.parametrize('k, l', [(0.0, 0), (-1.0, 0), (1.0, -1)])
def test_single_momentum_solution_rejects_bad_arguments(gaussian_potential, radial_grid, k, l):
    with pytest.raises(DomainError):
        solve_radial(gaussian_potential, k, l, radial_grid)
