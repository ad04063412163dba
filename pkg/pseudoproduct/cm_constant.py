from itertools import combinations_with_replacement
from typing import List

import numpy as np

from consts.pseudoproduct_consts import CM_SAMPLE_AXIS
from consts.typing_consts import ComplexArray
from exceptions import DomainError
from grids.momentum_grid import MomentumGrid
from pseudoproduct.symbol_fn import SymbolFn


def cm_constant(m: SymbolFn, momentum_grid: MomentumGrid, order: int = 2) -> float:
    """
    max over the (sub-sampled, uniformly spaced) grid cube of (k₁ + k₂ + k₃)^{|α|}·|∂^α m| for |α| ≤ order,
    derivatives by centred differences.
    """
    if order not in (0, 1, 2):
        raise DomainError(f"Coifman–Meyer constants are computed up to order 2, got {order}")

    stride = int(np.ceil(momentum_grid.n_k / CM_SAMPLE_AXIS))
    nodes = momentum_grid.nodes[::stride]
    spacing = stride * momentum_grid.spacing
    values = m.sample_cube(nodes)
    total_momentum = sum(np.meshgrid(*([nodes] * m.variables), indexing='ij', sparse=True))
    constant = float(np.max(np.abs(values)))

    for degree, derivatives in enumerate(_derivatives(values, spacing, order), start=1):
        for derivative in derivatives:
            constant = max(constant, float(np.max(total_momentum ** degree * np.abs(derivative))))

    return constant


def _derivatives(values: ComplexArray, spacing: float, order: int) -> List[List[ComplexArray]]:
    axes = range(values.ndim)
    first = [np.gradient(values, spacing, axis=axis, edge_order=2) for axis in axes]
    derivatives = [first] if order >= 1 else []

    if order == 2:
        second = [np.gradient(first[i], spacing, axis=j, edge_order=2) for i, j in combinations_with_replacement(axes, 2)]
        derivatives.append(second)

    return derivatives
