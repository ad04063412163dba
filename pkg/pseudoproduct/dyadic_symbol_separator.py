from typing import List, Tuple

import numpy as np
from tqdm import tqdm

from consts.pseudoproduct_consts import SEPARATION_PERIOD, BLOCK_STRETCH, SEPARATION_SAMPLES, \
    DEFAULT_FOURIER_TRUNCATION, FOURIER_TRUNCATION_STEP, MAX_FOURIER_TRUNCATION, TERM_BUDGET, PRUNED_MASS_FRACTION, \
    DOMINANT_PLATEAU, DOMINANT_RAMP_WIDTH, DOMINANT_FOLD_AMPLITUDE, COMPANION_PLATEAU, COMPANION_RAMP_END
from consts.typing_consts import ComplexArray, RealArray
from exceptions import BudgetExceededError
from grids.momentum_grid import MomentumGrid
from models.separation_method import SeparationMethod
from pseudoproduct.separable_symbol import SeparableSymbol, SymbolBlock, SymbolTerm, sampled_indices, prune_mask
from pseudoproduct.symbol_fn import SymbolFn
from pseudoproduct.symbol_separator_interface import ISymbolSeparator
from tools.logging import logger
from transform.bumps import band_pass_bump, low_pass_bump, smooth_plateau

BlockLayout = Tuple[float, int]


class DyadicSymbolSeparator(ISymbolSeparator):
    """
    Splits the grid cube by the Littlewood–Paley scale N of the largest variable, with the exact partition

        1 = ∑_N ∑_d Φ(k_d/N) ∏_{i<d} Ψ(k_i/N) ∏_{i>d} Ψ(k_i/(2N))

    on the grid, and expands the symbol of every block in a Fourier series of the rescaled variable x = k/(4N).
    Each term is a product of windows modulated by e^{2πi n k/(K·4N)}, K = SEPARATION_PERIOD.
    """

    def __init__(self,
                 samples: int = SEPARATION_SAMPLES,
                 max_truncation: int = MAX_FOURIER_TRUNCATION,
                 term_budget: int = TERM_BUDGET):
        self._samples = samples
        self._max_truncation = min(max_truncation, samples // 2 - 1)
        self._term_budget = term_budget

    def separate(self, m: SymbolFn, momentum_grid: MomentumGrid, tolerance: float) -> SeparableSymbol:
        logger.info(f"Starting to separate symbol `{m.name}` over dyadic blocks")
        layouts = self._block_layouts(m.variables, momentum_grid)
        spectra = []

        with tqdm(total=len(layouts)) as progress_bar:
            for scale, dominant in layouts:
                spectra.append(self._block_spectrum(m, scale, dominant))
                progress_bar.update(1)

        indices = sampled_indices(momentum_grid.n_k)
        target = m.sample_cube(momentum_grid.nodes[indices])
        best_error = float('inf')

        for truncation in range(DEFAULT_FOURIER_TRUNCATION, self._max_truncation + 1, FOURIER_TRUNCATION_STEP):
            symbol = self._assemble(m.variables, momentum_grid, layouts, spectra, truncation, tolerance, best_error)
            error = float(np.max(np.abs(symbol.evaluate(indices) - target)))
            best_error = min(best_error, error)

            if error <= tolerance:
                symbol.reconstruction_error = error
                logger.info(f"Separated `{m.name}` into {symbol.term_count} terms with sup error {error:.2e}")

                return symbol

            logger.info(f"Truncation |n| ≤ {truncation} leaves sup error {error:.2e} above {tolerance:.1e}")

        raise BudgetExceededError(
            f"Dyadic separation of `{m.name}` cannot reach {tolerance:.1e} with |n| ≤ {self._max_truncation}",
            best_error=best_error
        )

    @property
    def name(self) -> str:
        return SeparationMethod.DYADIC.value

    @staticmethod
    def _block_layouts(variables: int, momentum_grid: MomentumGrid) -> List[BlockLayout]:
        lowest = int(np.floor(np.log2(momentum_grid.k_min / 2)))
        highest = int(np.ceil(np.log2(momentum_grid.k_max / 2)))
        nodes = momentum_grid.nodes
        layouts = []

        for exponent in range(lowest, highest + 1):
            scale = 2.0 ** exponent

            if np.any(band_pass_bump(nodes / scale) > 0):
                layouts.extend((scale, dominant) for dominant in range(variables))

        return layouts

    def _block_spectrum(self, m: SymbolFn, scale: float, dominant: int) -> ComplexArray:
        """Fourier coefficients a_n, |n_i| ≤ max truncation, of the folded block symbol on [−K/2, K/2)^v."""
        positions = SEPARATION_PERIOD * (np.arange(self._samples) / self._samples - 0.5)
        stretch = BLOCK_STRETCH * scale
        axes = [
            stretch * (_dominant_fold(positions) if axis == dominant else np.abs(_companion_fold(positions)))
            for axis in range(m.variables)
        ]
        values = m.sample_cube(*axes)
        coefficients = np.fft.fftshift(np.fft.fftn(values)) / values.size
        modes = np.arange(self._samples) - self._samples // 2
        signs = (-1.0) ** modes
        centre, width = self._samples // 2, self._max_truncation

        for axis in range(m.variables):
            shape = [1] * m.variables
            shape[axis] = -1
            coefficients = coefficients * signs.reshape(shape)

        window = slice(centre - width, centre + width + 1)
        return coefficients[(window,) * m.variables]

    def _assemble(self,
                  variables: int,
                  momentum_grid: MomentumGrid,
                  layouts: List[BlockLayout],
                  spectra: List[ComplexArray],
                  truncation: int,
                  tolerance: float,
                  best_error: float) -> SeparableSymbol:
        offset = self._max_truncation - truncation
        cut = (slice(offset, offset + 2 * truncation + 1),) * variables
        labels = np.arange(-truncation, truncation + 1)
        prune_budget = PRUNED_MASS_FRACTION * tolerance / len(layouts)
        masks = [prune_mask(spectrum[cut], prune_budget) for spectrum in spectra]
        term_count = int(sum(mask.sum() for mask in masks))

        if term_count > self._term_budget:
            raise BudgetExceededError(
                f"Dyadic separation needs {term_count} terms at |n| ≤ {truncation}, over the budget of "
                f"{self._term_budget}",
                best_error=best_error
            )

        blocks, terms = [], []

        for block_index, ((scale, dominant), spectrum, mask) in enumerate(zip(layouts, spectra, masks)):
            banks = tuple(
                _window(momentum_grid.nodes, scale, axis, dominant) * _modulations(momentum_grid.nodes, labels, scale)
                for axis in range(variables)
            )
            blocks.append(SymbolBlock(banks=banks, labels=(labels,) * variables, scale=scale, dominant=dominant))
            coefficients = spectrum[cut]

            for modes in np.argwhere(mask):
                modes = tuple(int(mode) for mode in modes)
                terms.append(SymbolTerm(block=block_index, modes=modes, coefficient=complex(coefficients[modes])))

        return SeparableSymbol(
            blocks=blocks,
            terms=terms,
            variables=variables,
            momentum_grid=momentum_grid,
            method=SeparationMethod.DYADIC,
            tolerance=tolerance
        )


def _window(nodes: RealArray, scale: float, axis: int, dominant: int) -> RealArray:
    if axis == dominant:
        return band_pass_bump(nodes / scale)

    if axis < dominant:
        return low_pass_bump(nodes / scale)

    return low_pass_bump(nodes / (2 * scale))


def _modulations(nodes: RealArray, labels: np.ndarray, scale: float) -> ComplexArray:
    return np.exp(2j * np.pi * np.outer(labels, nodes) / (SEPARATION_PERIOD * BLOCK_STRETCH * scale))


def _dominant_fold(x: RealArray) -> RealArray:
    """Identity on the dominant plateau [1/4, 1], folded back inside (0, 1) elsewhere, smooth and 4-periodic."""
    lower, upper = DOMINANT_PLATEAU
    centre, half_width = (lower + upper) / 2, (upper - lower) / 2
    shifted = np.mod(x - centre + SEPARATION_PERIOD / 2, SEPARATION_PERIOD) - SEPARATION_PERIOD / 2
    plateau = smooth_plateau(shifted, half_width, half_width + DOMINANT_RAMP_WIDTH)
    folded = DOMINANT_FOLD_AMPLITUDE * _periodic_sine(shifted)

    return centre + plateau * shifted + (1 - plateau) * folded


def _companion_fold(x: RealArray) -> RealArray:
    """Identity on |x| ≤ 1, folded back to 0 at ±K/2, smooth and 4-periodic."""
    plateau = smooth_plateau(x, COMPANION_PLATEAU, COMPANION_RAMP_END)
    return plateau * x + (1 - plateau) * _periodic_sine(x)


def _periodic_sine(x: RealArray) -> RealArray:
    return SEPARATION_PERIOD / (2 * np.pi) * np.sin(2 * np.pi * x / SEPARATION_PERIOD)
