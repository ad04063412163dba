from typing import Dict, Iterable

import numpy as np
from tqdm import tqdm

from consts.typing_consts import ComplexArray, RealArray
from exceptions import ShapeMismatchError
from grids.angular_quadrature import AngularQuadrature, default_angular_nodes, get_angular_quadrature
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import inner_product
from grids.spectral_field import SpectralField
from pseudoproduct.separable_symbol import SeparableSymbol, SymbolTerm
from scattering.scattering_table import ScatteringTable
from transform.distorted_fourier_transform import get_transform


class PseudoProduct:
    """
    T(f, g) = ∑ a·m₃(D♯)[(m₁(D♯)f)·(m₂(D♯)g)], products on the angular collocation grid. Every modulated copy
    m_i(D♯)f is synthesised once per block and mode; blocks and terms are reduced in a fixed order.
    """

    def __init__(self, symbol: SeparableSymbol, table: ScatteringTable):
        if symbol.momentum_grid != table.momentum_grid:
            raise ShapeMismatchError(
                f"Symbol was separated on {symbol.momentum_grid}, the table lives on {table.momentum_grid}"
            )

        self._symbol = symbol
        self._table = table
        self._transform = get_transform(table)

    def apply(self, f: AxisymmetricField, g: AxisymmetricField) -> AxisymmetricField:
        full_l_max = f.l_max + g.l_max
        l_max = min(full_l_max, self._table.l_max)
        quadrature = get_angular_quadrature(max(default_angular_nodes(max(f.l_max, g.l_max)), full_l_max + 1))
        f_spectral = self._transform.forward(f)
        g_spectral = self._transform.forward(g)
        shape = (quadrature.nodes.size, f.grid.n_r)
        pointwise = np.zeros(shape, dtype=np.complex128)
        outer = SpectralField.zeros(self._table.momentum_grid, l_max)
        dropped_mass = 0.0
        grouped = self._symbol.terms_by_block()

        with tqdm(total=len(grouped)) as progress_bar:
            for block_index in sorted(grouped):
                terms = grouped[block_index]
                banks = self._symbol.blocks[block_index].banks
                f_copies = self._modulated_copies(f_spectral, banks[0], (term.modes[0] for term in terms), quadrature)
                g_copies = self._modulated_copies(g_spectral, banks[1], (term.modes[1] for term in terms), quadrature)

                if self._symbol.variables == 2:
                    for term in terms:
                        pointwise += term.coefficient * f_copies[term.modes[0]] * g_copies[term.modes[1]]
                else:
                    for mode, values in self._outer_accumulators(terms, f_copies, g_copies, shape).items():
                        product = AxisymmetricField.from_collocation(values, f.grid, full_l_max, quadrature)
                        product = product.with_l_max(l_max)
                        dropped_mass += product.dropped_mass
                        outer = outer + self._transform.forward(product).multiply(banks[2][mode])

                progress_bar.update(1)

        if self._symbol.variables == 2:
            product = AxisymmetricField.from_collocation(pointwise, f.grid, full_l_max, quadrature)
            return product.with_l_max(l_max)

        result = self._transform.inverse(outer)
        result.dropped_mass = dropped_mass

        return result

    def _modulated_copies(self,
                          spectral: SpectralField,
                          bank: ComplexArray,
                          modes: Iterable[int],
                          quadrature: AngularQuadrature) -> Dict[int, ComplexArray]:
        return {
            mode: self._transform.inverse(spectral.multiply(bank[mode])).to_collocation(quadrature)
            for mode in sorted(set(modes))
        }

    @staticmethod
    def _outer_accumulators(terms: Iterable[SymbolTerm],
                            f_copies: Dict[int, ComplexArray],
                            g_copies: Dict[int, ComplexArray],
                            shape: tuple) -> Dict[int, ComplexArray]:
        accumulators: Dict[int, ComplexArray] = {}

        for term in terms:
            accumulator = accumulators.setdefault(term.modes[2], np.zeros(shape, dtype=np.complex128))
            accumulator += term.coefficient * f_copies[term.modes[0]] * g_copies[term.modes[1]]

        return dict(sorted(accumulators.items()))


def apply_T(f: AxisymmetricField,
            g: AxisymmetricField,
            symbol: SeparableSymbol,
            table: ScatteringTable) -> AxisymmetricField:
    return PseudoProduct(symbol, table).apply(f, g)


def trilinear_lambda(f: AxisymmetricField,
                     g: AxisymmetricField,
                     h: AxisymmetricField,
                     symbol: SeparableSymbol,
                     table: ScatteringTable) -> complex:
    """Λ(f, g, h) = ∫ T(f, g)·h dx, a bilinear pairing: the inner product against conj(h) undoes its conjugation."""
    return inner_product(apply_T(f, g, symbol, table), h.conj())


def cross_backend_bound(f: AxisymmetricField,
                        g: AxisymmetricField,
                        dyadic: SeparableSymbol,
                        global_symbol: SeparableSymbol,
                        table: ScatteringTable) -> float:
    """
    Upper bound for ‖T_dyadic(f, g) − T_global(f, g)‖₂ for two-variable symbols and radial data: the symbols differ
    by at most e_d + e_g on the cube, so the difference is dominated pointwise by (e_d + e_g)·|f|♯·|g|♯, where |f|♯
    synthesises |f♯| against |E₀|.
    """
    if dyadic.variables != 2 or global_symbol.variables != 2:
        raise ShapeMismatchError("The cross-backend bound is stated for two-variable symbols")

    if f.l_max != 0 or g.l_max != 0:
        raise ShapeMismatchError("The cross-backend bound is stated for radial (single-channel) data")

    transform = get_transform(table)
    first = _absolute_synthesis(transform.forward(f).channels[0], table)
    second = _absolute_synthesis(transform.forward(g).channels[0], table)
    second_norm = np.sqrt(4 * np.pi * np.sum(second ** 2 * f.grid.volume_weights))
    error_sum = dyadic.reconstruction_error + global_symbol.reconstruction_error

    return float(error_sum * np.max(first) * second_norm)


def _absolute_synthesis(channel: ComplexArray, table: ScatteringTable) -> RealArray:
    weights = np.sqrt(2 / np.pi) * table.momentum_grid.volume_weights * np.abs(channel)
    return np.abs(table.eigenfunctions(0)).T @ weights
