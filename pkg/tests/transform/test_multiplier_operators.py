import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import DomainError
from grids.angular_quadrature import default_angular_nodes, get_angular_quadrature
from grids.field_algebra import l2_norm, lp_norm
from models.littlewood_paley_mode import LittlewoodPaleyMode
from transform.dyadic_ladder import DyadicLadder
from transform.multiplier_operators import apply_multiplier, band_projections, lambda_inverse, lambda_symbol, \
    littlewood_paley, low_pass_bump_at, maximal_modulated, maximal_modulated_norm, sobolev_norm, square_function, \
    square_function_norm
from transform.multiplier_spec import MultiplierSpec, constant_multiplier


def test_constant_multiplier_is_the_identity(gaussian_table, mixed_field):
    image = apply_multiplier(mixed_field, constant_multiplier(), gaussian_table)
    assert l2_norm(image - mixed_field) <= 1e-6 * l2_norm(mixed_field)


def test_band_projections_sum_back_to_the_field(gaussian_table, mixed_field):
    ladder = DyadicLadder()
    projections = band_projections(mixed_field, gaussian_table, ladder)
    low = littlewood_paley(mixed_field, ladder.lowest_scale, gaussian_table, LittlewoodPaleyMode.LOW, ladder)
    total = sum(projections[1:], projections[0]) + low

    assert len(projections) == len(ladder.scales)
    assert l2_norm(total - mixed_field) <= 1e-6 * l2_norm(mixed_field)


def test_square_function_is_comparable_to_the_l2_norm(free_table, gaussian_field):
    ratio = square_function_norm(gaussian_field, 0.0, 2.0, free_table) / l2_norm(gaussian_field)
    assert 0.65 <= ratio <= 1.0 + 1e-9


def test_sobolev_norm_of_order_zero_is_the_lebesgue_norm(free_table, gaussian_field):
    assert sobolev_norm(gaussian_field, 0.0, 4.0, True, free_table) == lp_norm(gaussian_field, 4.0)


def test_inhomogeneous_h1_norm_of_gaussian(free_table, gaussian_field, momentum_grid):
    k = momentum_grid.nodes
    spectral_mass = 4 * np.pi * np.sum((1 + k ** 2) * np.exp(-k ** 2) * momentum_grid.volume_weights)

    assert sobolev_norm(gaussian_field, 1.0, 2.0, False, free_table) == pytest.approx(np.sqrt(spectral_mass), rel=1e-8)


@pytest.mark.parametrize('s, p', [(2.5, 2.0), (1.0, 1.0), (1.0, np.inf)])
def test_sobolev_norm_rejects_out_of_range_parameters(free_table, gaussian_field, s, p):
    with pytest.raises(DomainError):
        sobolev_norm(gaussian_field, s, p, True, free_table)


def test_lambda_symbol_interpolates_between_its_regimes():
    k = np.array([0.5, 1.0, 2.0, 4.0])
    values = lambda_symbol(k, alpha=1.0, t=1.0)

    assert_allclose(values[:2], 1.0)
    assert_allclose(values[2:], 1 / k[2:])
    assert np.all(np.diff(lambda_symbol(np.linspace(0.1, 4, 50), 2.0, 1.0)) <= 0)


@pytest.mark.parametrize('alpha, t', [(-1.0, 1.0), (1.0, 0.0)])
def test_lambda_inverse_rejects_invalid_parameters(free_table, gaussian_field, alpha, t):
    with pytest.raises(DomainError):
        lambda_inverse(gaussian_field, alpha, t, free_table)


def test_maximal_function_dominates_each_low_pass_piece(free_table, gaussian_field):
    ladder = DyadicLadder(depth=2)
    maximal = maximal_modulated_norm(gaussian_field, 0, 2.0, free_table, ladder)
    top = littlewood_paley(gaussian_field, ladder.scales[-1], free_table, LittlewoodPaleyMode.LOW, ladder)

    assert maximal >= l2_norm(top) * (1 - 1e-9)


def test_modulated_multiplier_has_unit_modulus_phase():
    spec = MultiplierSpec(symbol=lambda k: np.ones_like(k), modulation=2, scale=1.0)
    assert_allclose(np.abs(spec.evaluate(np.linspace(0.1, 4, 10))), 1.0)


def test_square_function_l2_norm_sums_the_band_masses(gaussian_table, gaussian_field):
    band_mass = sum(l2_norm(projection) ** 2 for projection in band_projections(gaussian_field, gaussian_table))
    expected = np.sqrt(band_mass)

    assert l2_norm(square_function(gaussian_field, gaussian_table)) == pytest.approx(expected, rel=1e-8)
    assert square_function_norm(gaussian_field, 0.0, 2.0, gaussian_table) == pytest.approx(expected, rel=1e-8)


def test_weighted_square_function_is_comparable_to_the_homogeneous_h1_norm(free_table, gaussian_field):
    ratio = square_function_norm(gaussian_field, 1.0, 2.0, free_table) / sobolev_norm(gaussian_field, 1.0, 2.0, True,
                                                                                      free_table)
    assert 0.25 <= ratio <= 4.0


def test_unmodulated_maximal_function_dominates_every_low_pass_piece(gaussian_table, gaussian_field):
    ladder = DyadicLadder()
    quadrature = get_angular_quadrature(default_angular_nodes(gaussian_field.l_max))
    maximal = maximal_modulated(gaussian_field, 0, gaussian_table, ladder).to_collocation(quadrature)

    for scale in ladder.scales:
        piece = apply_multiplier(gaussian_field, MultiplierSpec(symbol=low_pass_bump_at(scale)), gaussian_table)
        magnitude = np.abs(piece.to_collocation(quadrature))
        assert np.all(maximal.real >= magnitude - 1e-12 * magnitude.max())


@pytest.mark.parametrize('n', [0, 2, 8])
def test_modulated_maximal_function_obeys_the_cubic_shift_bound(free_table, gaussian_field, n):
    ratio = maximal_modulated_norm(gaussian_field, n, 4.0, free_table) / lp_norm(gaussian_field, 4.0)
    assert ratio <= 4.0 * (1 + n ** 2) ** 1.5
