from typing import Dict

from exceptions import DomainError
from grids.momentum_grid import MomentumGrid
from models.separation_method import SeparationMethod
from pseudoproduct.dyadic_symbol_separator import DyadicSymbolSeparator
from pseudoproduct.global_symbol_separator import GlobalSymbolSeparator
from pseudoproduct.separable_symbol import SeparableSymbol
from pseudoproduct.symbol_fn import SymbolFn
from pseudoproduct.symbol_separator_interface import ISymbolSeparator

SEPARATORS: Dict[SeparationMethod, ISymbolSeparator] = {
    SeparationMethod.DYADIC: DyadicSymbolSeparator(),
    SeparationMethod.GLOBAL: GlobalSymbolSeparator()
}


def separate_symbol(m: SymbolFn,
                    method: SeparationMethod,
                    tolerance: float,
                    momentum_grid: MomentumGrid) -> SeparableSymbol:
    if not tolerance > 0:
        raise DomainError(f"Separation tolerance must be positive, got {tolerance}")

    return SEPARATORS[method].separate(m, momentum_grid, tolerance)
