from typing import List, Tuple

import numpy as np
from tqdm import tqdm

from consts.pseudoproduct_consts import TERM_BUDGET, PRUNED_MASS_FRACTION, SEPARABLE_RANK_TOLERANCE, \
    RANK_REFINEMENT_FACTOR
from consts.typing_consts import ComplexArray, RealArray
from exceptions import BudgetExceededError
from grids.momentum_grid import MomentumGrid
from models.separation_method import SeparationMethod
from pseudoproduct.separable_symbol import SeparableSymbol, SymbolBlock, SymbolTerm, sampled_indices, prune_mask
from pseudoproduct.symbol_fn import SymbolFn
from pseudoproduct.symbol_separator_interface import ISymbolSeparator
from tools.logging import logger


class GlobalSymbolSeparator(ISymbolSeparator):
    """
    Tensor factorisation of m on the whole grid cube: an SVD for two variables, a truncated higher-order SVD for
    three. Factor columns become the multiplier banks and the core entries the coefficients.
    """

    def __init__(self, term_budget: int = TERM_BUDGET):
        self._term_budget = term_budget

    def separate(self, m: SymbolFn, momentum_grid: MomentumGrid, tolerance: float) -> SeparableSymbol:
        logger.info(f"Starting to factorise symbol `{m.name}` on the {momentum_grid.n_k}-node grid cube")
        bases, spectra = self._mode_bases(m, momentum_grid)
        core = self._core(m, momentum_grid, bases)
        indices = sampled_indices(momentum_grid.n_k)
        target = m.sample_cube(momentum_grid.nodes[indices])
        best_error = float('inf')

        for threshold in self._thresholds(tolerance):
            ranks = tuple(max(1, int(np.sum(values > threshold * values[0]))) for values in spectra)
            symbol = self._assemble(m.variables, momentum_grid, bases, core, ranks, tolerance, best_error)
            error = float(np.max(np.abs(symbol.evaluate(indices) - target)))
            best_error = min(best_error, error)

            if error <= tolerance:
                symbol.reconstruction_error = error
                logger.info(f"Factorised `{m.name}` with ranks {ranks} into {symbol.term_count} terms, "
                            f"sup error {error:.2e}")

                return symbol

        raise BudgetExceededError(f"Global separation of `{m.name}` cannot reach {tolerance:.1e}", best_error)

    @property
    def name(self) -> str:
        return SeparationMethod.GLOBAL.value

    @staticmethod
    def _thresholds(tolerance: float) -> List[float]:
        thresholds = []
        threshold = RANK_REFINEMENT_FACTOR * tolerance

        while threshold > SEPARABLE_RANK_TOLERANCE:
            thresholds.append(threshold)
            threshold *= RANK_REFINEMENT_FACTOR

        return thresholds + [SEPARABLE_RANK_TOLERANCE]

    @staticmethod
    def _mode_bases(m: SymbolFn, momentum_grid: MomentumGrid) -> Tuple[List[ComplexArray], List[RealArray]]:
        """Left singular vectors of every mode unfolding, the other modes sub-sampled for three variables."""
        nodes = momentum_grid.nodes
        samples = nodes[sampled_indices(momentum_grid.n_k)]
        bases, spectra = [], []

        for axis in range(m.variables):
            if m.variables == 2:
                values = m.sample_cube(nodes)
            else:
                values = m.sample_cube(*[nodes if other == axis else samples for other in range(m.variables)])

            unfolding = np.moveaxis(values, axis, 0).reshape(momentum_grid.n_k, -1)
            basis, singular_values, _ = np.linalg.svd(unfolding, full_matrices=False)
            keep = singular_values > SEPARABLE_RANK_TOLERANCE * singular_values[0]
            bases.append(basis[:, keep])
            spectra.append(singular_values[keep])

        return bases, spectra

    @staticmethod
    def _core(m: SymbolFn, momentum_grid: MomentumGrid, bases: List[ComplexArray]) -> ComplexArray:
        """m ×₁ U₁ᴴ ×₂ U₂ᴴ (×₃ U₃ᴴ) over the full cube, one k₁ slab at a time."""
        nodes = momentum_grid.nodes

        if m.variables == 2:
            return bases[0].conj().T @ m.sample_cube(nodes) @ bases[1].conj()

        core = np.zeros(tuple(basis.shape[1] for basis in bases), dtype=np.complex128)

        with tqdm(total=momentum_grid.n_k) as progress_bar:
            for index in range(momentum_grid.n_k):
                slab = m.sample_cube(nodes[index:index + 1], nodes, nodes)[0]
                projected = bases[1].conj().T @ slab @ bases[2].conj()
                core += np.conj(bases[0][index])[:, None, None] * projected[None, :, :]
                progress_bar.update(1)

        return core

    def _assemble(self,
                  variables: int,
                  momentum_grid: MomentumGrid,
                  bases: List[ComplexArray],
                  core: ComplexArray,
                  ranks: Tuple[int, ...],
                  tolerance: float,
                  best_error: float) -> SeparableSymbol:
        truncated = core[tuple(slice(0, rank) for rank in ranks)]
        mask = prune_mask(truncated, PRUNED_MASS_FRACTION * tolerance)

        if mask.sum() > self._term_budget:
            raise BudgetExceededError(
                f"Global separation needs {int(mask.sum())} terms at ranks {ranks}, over the budget of "
                f"{self._term_budget}",
                best_error=best_error
            )

        banks = tuple(basis[:, :rank].T.copy() for basis, rank in zip(bases, ranks))
        labels = tuple(np.arange(rank) for rank in ranks)
        terms = [
            SymbolTerm(block=0, modes=tuple(int(mode) for mode in modes), coefficient=complex(truncated[tuple(modes)]))
            for modes in np.argwhere(mask)
        ]

        return SeparableSymbol(
            blocks=[SymbolBlock(banks=banks, labels=labels)],
            terms=terms,
            variables=variables,
            momentum_grid=momentum_grid,
            method=SeparationMethod.GLOBAL,
            tolerance=tolerance
        )
