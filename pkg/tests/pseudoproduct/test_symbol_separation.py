import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import ConfigurationError, DomainError, ShapeMismatchError
from models.separation_method import SeparationMethod
from pseudoproduct.cm_constant import cm_constant
from pseudoproduct.separable_symbol import sampled_indices
from pseudoproduct.symbol_fn import SymbolFn
from pseudoproduct.symbol_library import balanced_symbol, degree_one_symbol, product_symbol, unit_symbol
from pseudoproduct.symbol_separation import separate_symbol


def test_symbols_declare_two_or_three_momenta():
    with pytest.raises(ConfigurationError):
        SymbolFn(function=lambda *k: 1.0, variables=4)

    with pytest.raises(ConfigurationError):
        SymbolFn(function=lambda *k: 1.0, decay_order=-1.0)


def test_symbols_check_their_arity():
    with pytest.raises(ShapeMismatchError):
        unit_symbol(2)(np.ones(3))


def test_sample_cube_repeats_a_single_axis():
    axis = np.array([1.0, 2.0])
    values = product_symbol(lambda k: k, lambda k: k ** 2, variables=2).sample_cube(axis)

    assert_allclose(values, np.outer(axis, axis ** 2))


def test_separation_needs_a_positive_tolerance(momentum_grid):
    with pytest.raises(DomainError):
        separate_symbol(unit_symbol(2), SeparationMethod.GLOBAL, 0.0, momentum_grid)


@pytest.mark.parametrize('variables', [2, 3])
def test_global_separation_of_the_unit_symbol_is_one_term(momentum_grid, variables):
    symbol = separate_symbol(unit_symbol(variables), SeparationMethod.GLOBAL, 1e-8, momentum_grid)

    assert symbol.term_count == 1
    assert symbol.reconstruction_error <= 1e-12
    assert np.isnan(symbol.coefficient_decay_exponent())


def test_global_separation_of_a_product_symbol(momentum_grid):
    m = product_symbol(lambda k: np.exp(-k), lambda k: 1 / (1 + k ** 2), variables=3)
    symbol = separate_symbol(m, SeparationMethod.GLOBAL, 1e-8, momentum_grid)
    indices = sampled_indices(momentum_grid.n_k)

    assert symbol.term_count == 1
    assert_allclose(symbol.evaluate(indices), m.sample_cube(momentum_grid.nodes[indices]), atol=1e-8)


def test_global_separation_meets_the_tolerance_for_a_smooth_symbol(momentum_grid):
    symbol = separate_symbol(balanced_symbol(), SeparationMethod.GLOBAL, 1e-3, momentum_grid)

    assert symbol.reconstruction_error <= 1e-3
    assert symbol.method == SeparationMethod.GLOBAL


def test_dyadic_separation_of_the_unit_symbol_uses_only_the_zero_mode(momentum_grid):
    symbol = separate_symbol(unit_symbol(2), SeparationMethod.DYADIC, 1e-6, momentum_grid)
    frame = symbol.to_frame()

    assert symbol.reconstruction_error <= 1e-10
    assert symbol.coefficient_decay_exponent() == float('-inf')
    assert (frame['n1'] == 0).all() and (frame['n2'] == 0).all() and (frame['n3'] == 0).all()
    assert len(frame) == symbol.term_count == len(symbol.blocks)


def test_coifman_meyer_constant_of_the_unit_symbol(momentum_grid):
    assert cm_constant(unit_symbol(3), momentum_grid) == pytest.approx(1.0)


def test_degree_one_symbol_has_a_large_constant(momentum_grid):
    assert cm_constant(degree_one_symbol(), momentum_grid) > 5.0


def test_coifman_meyer_order_is_bounded(momentum_grid):
    with pytest.raises(DomainError):
        cm_constant(unit_symbol(2), momentum_grid, order=3)
