from dataclasses import dataclass
from typing import Callable

import numpy as np

from consts.typing_consts import ComplexArray, RealArray
from exceptions import ConfigurationError, ShapeMismatchError
from utils.numeric_utils import ensure_finite

SymbolFunction = Callable[..., ComplexArray]


@dataclass(frozen=True)
class SymbolFn:
    """
    A radial multilinear symbol m(k₁, k₂[, k₃]). `decay_order` δ ≥ 0 marks the improved class whose derivatives
    gain an extra ⟨k⟩^{−δ}; it is recorded, not enforced.
    """
    function: SymbolFunction
    variables: int = 3
    decay_order: float = 0.0
    name: str = 'symbol'

    def __post_init__(self):
        if self.variables not in (2, 3):
            raise ConfigurationError(f"Symbols take 2 or 3 momenta, `{self.name}` declares {self.variables}")

        if self.decay_order < 0:
            raise ConfigurationError(f"Decay order must be non-negative, got {self.decay_order}")

    def __call__(self, *momenta: RealArray) -> ComplexArray:
        if len(momenta) != self.variables:
            raise ShapeMismatchError(f"`{self.name}` takes {self.variables} momenta, got {len(momenta)}")

        with np.errstate(divide='ignore', invalid='ignore'):
            values = np.asarray(self.function(*momenta), dtype=np.complex128)

        return np.broadcast_to(values, np.broadcast(*momenta).shape)

    def sample_cube(self, *axes: RealArray) -> ComplexArray:
        """Samples on the product of the given axes (one axis repeated for every variable when only one is given)."""
        axes = axes if len(axes) == self.variables else axes * self.variables
        mesh = np.meshgrid(*axes, indexing='ij', sparse=True)

        return ensure_finite(np.array(self(*mesh)), f"Symbol `{self.name}` on the grid cube")
