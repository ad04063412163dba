from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from consts.pseudoproduct_consts import BLOCK_SCALE, FIRST_MODE, SECOND_MODE, THIRD_MODE, COEFFICIENT_MAGNITUDE, \
    DECAY_FIT_FLOOR, MAX_SAMPLED_AXIS
from consts.typing_consts import ComplexArray
from grids.momentum_grid import MomentumGrid
from models.separation_method import SeparationMethod
from utils.numeric_utils import log_log_slope

_EINSUM_SUBSCRIPTS = {2: 'ab,ai,bj->ij', 3: 'abc,ai,bj,ck->ijk'}
_MODE_COLUMNS = [FIRST_MODE, SECOND_MODE, THIRD_MODE]


@dataclass
class SymbolBlock:
    """
    Per-variable multiplier banks of one block: `banks[i]` has shape (rows, n_k) and holds m_i(k_j) for every
    mode the block can use; `labels[i]` names each row (the Fourier index n for dyadic blocks).
    """
    banks: Tuple[ComplexArray, ...]
    labels: Tuple[np.ndarray, ...]
    scale: Optional[float] = None
    dominant: Optional[int] = None


@dataclass
class SymbolTerm:
    block: int
    modes: Tuple[int, ...]
    coefficient: complex


@dataclass
class SeparableSymbol:
    """m(k₁, k₂, k₃) ≈ ∑_terms a·m₁(k₁)m₂(k₂)m₃(k₃) on the momentum grid cube."""
    blocks: List[SymbolBlock]
    terms: List[SymbolTerm]
    variables: int
    momentum_grid: MomentumGrid
    method: SeparationMethod
    tolerance: float
    reconstruction_error: float = float('nan')
    _terms_by_block: Dict[int, List[SymbolTerm]] = field(default=None, init=False, repr=False)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def terms_by_block(self) -> Dict[int, List[SymbolTerm]]:
        if self._terms_by_block is None:
            grouped: Dict[int, List[SymbolTerm]] = {}

            for term in self.terms:
                grouped.setdefault(term.block, []).append(term)

            self._terms_by_block = grouped

        return self._terms_by_block

    def coefficient_tensor(self, block_index: int) -> ComplexArray:
        block = self.blocks[block_index]
        tensor = np.zeros(tuple(bank.shape[0] for bank in block.banks), dtype=np.complex128)

        for term in self.terms_by_block().get(block_index, []):
            tensor[term.modes] += term.coefficient

        return tensor

    def evaluate(self, indices: Sequence[int]) -> ComplexArray:
        """The expansion on the sub-cube of momentum nodes picked by `indices` along every axis."""
        indices = np.asarray(indices)
        total = np.zeros((indices.size,) * self.variables, dtype=np.complex128)

        for block_index in self.terms_by_block():
            factors = [bank[:, indices] for bank in self.blocks[block_index].banks]
            subscripts = _EINSUM_SUBSCRIPTS[self.variables]
            total += np.einsum(subscripts, self.coefficient_tensor(block_index), *factors, optimize=True)

        return total

    def coefficient_decay_exponent(self) -> float:
        """
        Slope of log max|a| against log(1 + |n₁| + |n₂| + |n₃|) over the kept Fourier modes of dyadic blocks;
        −∞ when fewer than three shells carry coefficients.
        """
        if self.method != SeparationMethod.DYADIC:
            return float('nan')

        if not self.terms:
            return float('-inf')

        envelope: Dict[int, float] = {}

        for term in self.terms:
            labels = self.blocks[term.block].labels
            shell = int(sum(abs(labels[axis][mode]) for axis, mode in enumerate(term.modes)))
            envelope[shell] = max(envelope.get(shell, 0.0), abs(term.coefficient))

        peak = max(envelope.values())
        shells = sorted(shell for shell, value in envelope.items() if shell > 0 and value > DECAY_FIT_FLOOR * peak)

        if len(shells) < 3:
            return float('-inf')

        slope, _ = log_log_slope([1 + shell for shell in shells], [envelope[shell] for shell in shells])
        return slope

    def to_frame(self) -> pd.DataFrame:
        records = []

        for term in self.terms:
            block = self.blocks[term.block]
            record = {BLOCK_SCALE: block.scale if block.scale is not None else np.nan}

            for axis, column in enumerate(_MODE_COLUMNS):
                record[column] = int(block.labels[axis][term.modes[axis]]) if axis < self.variables else 0

            record[COEFFICIENT_MAGNITUDE] = abs(term.coefficient)
            records.append(record)

        return pd.DataFrame.from_records(records, columns=[BLOCK_SCALE, *_MODE_COLUMNS, COEFFICIENT_MAGNITUDE])


def sampled_indices(n: int) -> np.ndarray:
    """At most MAX_SAMPLED_AXIS evenly spread node indices, both ends included."""
    return np.unique(np.linspace(0, n - 1, min(n, MAX_SAMPLED_AXIS)).round().astype(int))


def prune_mask(coefficients: ComplexArray, budget: float) -> np.ndarray:
    """Drops the smallest coefficients while their summed magnitude stays within `budget`."""
    magnitudes = np.abs(coefficients).ravel()
    order = np.argsort(magnitudes, kind='stable')
    dropped = order[np.cumsum(magnitudes[order]) <= budget]
    keep = magnitudes > 0
    keep[dropped] = False

    return keep.reshape(coefficients.shape)
