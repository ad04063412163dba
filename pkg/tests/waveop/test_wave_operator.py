import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import ConfigurationError, DegenerateInputError, DomainError, ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import inner_product, l2_norm
from grids.momentum_grid import MomentumGrid
from models.operator_kind import OperatorKind
from scattering.scattering_table_builder import build_free_table
from transform.field_families import gaussian_profile
from waveop.dispersive import dispersive_exponent, dispersive_series
from waveop.operator_handle import OperatorHandle
from waveop.wave_operator import commutator_radial, op_E, op_E_by_commutator, op_R3, propagator, wave_operator, \
    wave_operator_adjoint, weight_slope_ok
from waveop.wave_operator_tables import WaveOperatorTables


def test_free_wave_operator_is_exactly_the_identity(free_tables, mixed_field):
    assert wave_operator(mixed_field, free_tables) is mixed_field
    assert wave_operator_adjoint(mixed_field, free_tables) is mixed_field


def test_free_commutator_vanishes(free_tables, mixed_field):
    commutator = commutator_radial(mixed_field, lambda r: np.sqrt(1 + r ** 2), free_tables)
    assert_allclose(commutator.channels, 0)


def test_wave_operator_is_an_isometry(gaussian_tables, mixed_field):
    recovered = wave_operator_adjoint(wave_operator(mixed_field, gaussian_tables), gaussian_tables)
    assert l2_norm(recovered - mixed_field) <= 1e-6 * l2_norm(mixed_field)


def test_wave_operator_is_onto_without_bound_states(gaussian_tables, mixed_field):
    recovered = wave_operator(wave_operator_adjoint(mixed_field, gaussian_tables), gaussian_tables)
    assert l2_norm(recovered - mixed_field) <= 1e-6 * l2_norm(mixed_field)


def test_wave_operator_moves_data_when_the_potential_is_present(gaussian_tables, gaussian_field):
    assert l2_norm(wave_operator(gaussian_field, gaussian_tables) - gaussian_field) > 1e-3


@pytest.mark.parametrize('t', [0.5, 1.0])
def test_intertwining(gaussian_tables, gaussian_field, t):
    left = propagator(wave_operator(gaussian_field, gaussian_tables), t, gaussian_tables.distorted)
    right = wave_operator(propagator(gaussian_field, t, gaussian_tables.flat), gaussian_tables)

    assert l2_norm(left - right) <= 1e-5 * l2_norm(gaussian_field)


def test_propagator_is_unitary_and_trivial_at_zero(gaussian_table, mixed_field):
    assert propagator(mixed_field, 0.0, gaussian_table) is mixed_field
    assert l2_norm(propagator(mixed_field, 1.0, gaussian_table)) == pytest.approx(l2_norm(mixed_field), rel=1e-6)


def test_free_r3_is_the_polar_cosine(free_tables, gaussian_field):
    rotated = op_R3(gaussian_field, free_tables)

    assert_allclose(rotated.channels[1], gaussian_field.channels[0], atol=1e-14)


@pytest.fixture
def second_mixed_field(radial_grid):
    field = AxisymmetricField.zeros(radial_grid, 2)
    field.channels[0] = 0.7 * gaussian_profile(0.8)(radial_grid.nodes)
    field.channels[1] = (0.4 - 0.6j) * gaussian_profile(1.3, 1)(radial_grid.nodes)
    field.channels[2] = 0.5 * gaussian_profile(1.0, 2)(radial_grid.nodes)

    return field


def test_r3_is_self_adjoint_with_a_potential(gaussian_tables, mixed_field, second_mixed_field):
    left = inner_product(op_R3(mixed_field, gaussian_tables), second_mixed_field)
    right = inner_product(mixed_field, op_R3(second_mixed_field, gaussian_tables))

    assert abs(left - right) <= 1e-6 * l2_norm(mixed_field) * l2_norm(second_mixed_field)


def test_r3_is_a_contraction_with_a_potential(gaussian_tables, mixed_field, second_mixed_field):
    for field in (mixed_field, second_mixed_field):
        assert l2_norm(op_R3(field, gaussian_tables)) <= l2_norm(field) * (1 + 1e-6)


def test_e_operator_forms_agree(gaussian_tables, gaussian_field):
    direct = op_E(gaussian_field, gaussian_tables)
    by_commutator = op_E_by_commutator(gaussian_field, gaussian_tables)

    assert l2_norm(direct - by_commutator) <= 1e-12 * l2_norm(direct)


def test_weight_slope_check(gaussian_field):
    assert weight_slope_ok(lambda r: np.sqrt(1 + r ** 2), gaussian_field)
    assert not weight_slope_ok(lambda r: 2 * r, gaussian_field)


def test_tables_must_share_grids(gaussian_table, radial_grid):
    other_flat = build_free_table(radial_grid, MomentumGrid(8.0, 80), gaussian_table.l_max)

    with pytest.raises(ShapeMismatchError):
        WaveOperatorTables(distorted=gaussian_table, flat=other_flat)

    with pytest.raises(ShapeMismatchError):
        WaveOperatorTables(distorted=gaussian_table, flat=gaussian_table)


def test_dispersive_exponent():
    assert dispersive_exponent(2) == 0
    assert dispersive_exponent(6) == pytest.approx(1.0)


@pytest.mark.parametrize('times, p', [([1.0, 2.0], 7.0), ([0.5, 2.0], 6.0)])
def test_dispersive_series_rejects_invalid_parameters(free_tables, gaussian_field, times, p):
    with pytest.raises(DomainError):
        dispersive_series(gaussian_field, times, free_tables, p)


def test_dispersive_series_needs_nonzero_data(free_tables, radial_grid):
    with pytest.raises(DegenerateInputError):
        dispersive_series(AxisymmetricField.zeros(radial_grid, 0), [1.0], free_tables)


def test_dispersive_ratio_at_p_two_is_time_independent(free_tables, gaussian_field):
    ratios = dispersive_series(gaussian_field, [1.0, 2.0], free_tables, p=2)
    assert ratios[0] == pytest.approx(ratios[1], rel=1e-6)


def test_operator_handles_validate_their_parameters(free_tables):
    with pytest.raises(ConfigurationError):
        OperatorHandle(OperatorKind.PROPAGATOR, free_tables)

    with pytest.raises(ConfigurationError):
        OperatorHandle(OperatorKind.COMMUTATOR, free_tables)


def test_operator_handle_dispatch(free_tables, gaussian_field):
    handle = OperatorHandle(OperatorKind.PROPAGATOR, free_tables, time=1.0)
    expected = propagator(gaussian_field, 1.0, free_tables.distorted)

    assert handle.name == f'{OperatorKind.PROPAGATOR.value}(t=1)'
    assert_allclose(handle(gaussian_field).channels, expected.channels)
