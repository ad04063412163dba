from abc import ABC, abstractmethod

from grids.momentum_grid import MomentumGrid
from pseudoproduct.separable_symbol import SeparableSymbol
from pseudoproduct.symbol_fn import SymbolFn


class ISymbolSeparator(ABC):
    @abstractmethod
    def separate(self, m: SymbolFn, momentum_grid: MomentumGrid, tolerance: float) -> SeparableSymbol:
        raise NotImplementedError

    @property
    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError
