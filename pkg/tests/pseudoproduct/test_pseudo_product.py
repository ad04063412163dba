import numpy as np
import pytest

from exceptions import ConfigurationError, ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import inner_product, l2_norm, multiply_fields
from grids.momentum_grid import MomentumGrid
from models.separation_method import SeparationMethod
from pseudoproduct.holder import holder_family_report, holder_ratio, shifted_exponents, validate_holder_exponents
from pseudoproduct.pseudo_product import PseudoProduct, apply_T, cross_backend_bound, trilinear_lambda
from pseudoproduct.symbol_library import unit_symbol
from pseudoproduct.symbol_separation import separate_symbol
from transform.field_families import dilation_family, gaussian_profile


@pytest.fixture(scope='module')
def unit_pair(momentum_grid):
    return separate_symbol(unit_symbol(2), SeparationMethod.GLOBAL, 1e-8, momentum_grid)


@pytest.fixture
def wide_field(radial_grid):
    return AxisymmetricField.from_radial(radial_grid, gaussian_profile(1.3))


def test_unit_symbol_reproduces_the_pointwise_product(unit_pair, free_table, gaussian_field, wide_field):
    product = apply_T(gaussian_field, wide_field, unit_pair, free_table)
    expected = multiply_fields(gaussian_field, wide_field)

    assert l2_norm(product - expected) <= 1e-6 * l2_norm(expected)


def test_unit_trilinear_form_is_the_triple_integral(unit_pair, free_table, gaussian_field, wide_field):
    third = AxisymmetricField.from_radial(gaussian_field.grid, gaussian_profile(0.8))
    expected = inner_product(multiply_fields(gaussian_field, wide_field), third.conj())

    assert trilinear_lambda(gaussian_field, wide_field, third, unit_pair, free_table) == pytest.approx(expected, rel=1e-6)


def test_unit_three_variable_symbol_also_reproduces_the_product(momentum_grid, free_table, gaussian_field, wide_field):
    symbol = separate_symbol(unit_symbol(3), SeparationMethod.GLOBAL, 1e-8, momentum_grid)
    product = apply_T(gaussian_field, wide_field, symbol, free_table)
    expected = multiply_fields(gaussian_field, wide_field)

    assert l2_norm(product - expected) <= 1e-6 * l2_norm(expected)


def test_symbol_and_table_must_share_the_momentum_grid(free_table):
    foreign = separate_symbol(unit_symbol(2), SeparationMethod.GLOBAL, 1e-8, MomentumGrid(4.0, 32))

    with pytest.raises(ShapeMismatchError):
        PseudoProduct(foreign, free_table)


def test_cross_backend_bound_between_identical_backends(unit_pair, free_table, gaussian_field, wide_field):
    bound = cross_backend_bound(gaussian_field, wide_field, unit_pair, unit_pair, free_table)

    assert 0 <= bound <= 1e-9


def test_cross_backend_bound_is_stated_for_radial_data(unit_pair, free_table, dipole_field, gaussian_field):
    with pytest.raises(ShapeMismatchError):
        cross_backend_bound(dipole_field, gaussian_field, unit_pair, unit_pair, free_table)


def test_holder_exponents_must_be_consistent():
    validate_holder_exponents(4.0, 4.0, 2.0)

    with pytest.raises(ConfigurationError):
        validate_holder_exponents(4.0, 4.0, 3.0)

    with pytest.raises(ConfigurationError):
        validate_holder_exponents(0.5, 4.0, 0.4)


def test_shifted_exponents_move_by_epsilon():
    shifted_q, shifted_p = shifted_exponents(4.0, 4.0, 0.1)

    assert 1 / shifted_q == pytest.approx(0.35)
    assert 1 / shifted_p == pytest.approx(0.15)


def test_shifted_exponents_fall_back_to_the_opposite_shift():
    shifted_q, shifted_p = shifted_exponents(2.0, 1.0, 0.1)

    assert 1 / shifted_q == pytest.approx(0.9)
    assert 1 / shifted_p == pytest.approx(0.6)


def test_holder_ratio_of_the_unit_symbol_is_bounded(unit_pair, free_table, gaussian_field, wide_field):
    ratio = holder_ratio(gaussian_field, wide_field, unit_pair, 4.0, 4.0, 2.0, free_table)

    assert 0 < ratio <= 1.0 + 1e-6


def test_unit_symbol_holder_ratio_is_dilation_invariant(unit_pair, free_table, radial_grid, momentum_grid):
    family = dilation_family(gaussian_profile(), radial_grid, momentum_grid, exponents=(-1, 0))
    report = holder_family_report('unit', family, unit_pair, 4.0, 4.0, 2.0, free_table)

    assert report.parameters == [0.5, 1.0]
    assert report.max_ratio == max(report.ratios)
    assert all(0 < ratio <= 1.0 + 1e-6 for ratio in report.ratios)
    assert report.spread == pytest.approx(1.0, abs=1e-3)
    assert report.dropped_mass == 0


def test_holder_family_report_validates_the_exponents(unit_pair, free_table, radial_grid, momentum_grid):
    family = dilation_family(gaussian_profile(), radial_grid, momentum_grid, exponents=(0,))

    with pytest.raises(ConfigurationError):
        holder_family_report('unit', family, unit_pair, 4.0, 4.0, 3.0, free_table)
