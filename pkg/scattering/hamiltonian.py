import numpy as np

from grids.axisymmetric_field import AxisymmetricField
from scattering.potential import Potential

_STENCIL = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0


def apply_hamiltonian(f: AxisymmetricField, potential: Potential) -> AxisymmetricField:
    """
    (−Δ + V)f channel by channel, with −Δ acting on g = r·f_l through the fourth-order five-point stencil.
    Ghost values below r = 0 mirror the first two nodes with the parity (−1)^{l+1} of g; beyond r_max they vanish.
    """
    grid = f.grid
    nodes = grid.nodes
    result = np.empty_like(f.channels)

    for l, channel in enumerate(f.channels):
        reduced = nodes * channel
        parity = (-1) ** (l + 1)
        padded = np.concatenate([parity * reduced[1::-1], reduced, np.zeros(2)])
        second_derivative = sum(
            weight * padded[offset:offset + nodes.size] for offset, weight in enumerate(_STENCIL)
        ) / grid.spacing ** 2
        result[l] = -second_derivative / nodes + (l * (l + 1) / nodes ** 2 + potential(nodes)) * channel

    return AxisymmetricField(result, grid, f.dropped_mass)
