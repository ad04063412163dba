from typing import Callable, Dict

import numpy as np

from consts.typing_consts import RadialFunction
from pseudoproduct.symbol_fn import SymbolFn
from transform.bumps import low_pass_bump


def unit_symbol(variables: int = 3) -> SymbolFn:
    return SymbolFn(function=lambda *momenta: np.ones(np.broadcast(*momenta).shape), variables=variables, name='unit')


def product_symbol(first: RadialFunction, second: RadialFunction, variables: int = 3) -> SymbolFn:
    """φ(k₁)ψ(k₂), already separated."""
    return SymbolFn(
        function=lambda k1, k2, *_: first(k1) * second(k2),
        variables=variables,
        name='product'
    )


def energy_share_symbol() -> SymbolFn:
    """k₁²/(k₁² + k₂² + k₃²)."""
    return SymbolFn(function=lambda k1, k2, k3: k1 ** 2 / (k1 ** 2 + k2 ** 2 + k3 ** 2), name='energy_share')


def balanced_symbol() -> SymbolFn:
    """4k₁²k₂²/(k₁² + k₂²)², largest where both inputs carry the same frequency."""
    return SymbolFn(
        function=lambda k1, k2: 4 * k1 ** 2 * k2 ** 2 / (k1 ** 2 + k2 ** 2) ** 2,
        variables=2,
        name='balanced'
    )


def low_high_symbol() -> SymbolFn:
    """Ψ(4k₁/k₂): the low-high paraproduct cutoff."""
    return SymbolFn(function=lambda k1, k2: low_pass_bump(4 * k1 / k2), variables=2, name='low_high')


def degree_one_symbol() -> SymbolFn:
    """m = k₁, homogeneous of degree one and therefore outside the Coifman–Meyer class."""
    return SymbolFn(function=lambda k1, k2, k3: k1 + 0 * (k2 + k3), name='degree_one')


TEST_SYMBOLS: Dict[str, Callable[[], SymbolFn]] = {
    'unit': unit_symbol,
    'energy_share': energy_share_symbol,
    'balanced': balanced_symbol,
    'low_high': low_high_symbol
}
