from typing import Sequence

import numpy as np

from consts.typing_consts import RealArray
from exceptions import RangeError
from grids.angular_quadrature import default_angular_nodes, get_angular_quadrature
from scattering.riccati_bessel import riccati_j_with_derivative, riccati_y_with_derivative
from scattering.scattering_table import ScatteringTable


def radiation_defect(table: ScatteringTable, k: float, radii: Sequence[float]) -> RealArray:
    """
    Sommerfeld check on the scattered wave v = e(·; kẑ) − e^{ikz}: max over collocation angles of |R(∂_r − ik)v|
    at each radius R past the support. An outgoing wave makes the values decay like 1/R.
    """
    radii = np.asarray(radii, dtype=float)

    if np.any(radii <= table.potential.support_radius):
        raise RangeError(f"Radiation radii must exceed the support radius {table.potential.support_radius:.3f}")

    index = table.momentum_index(k)
    k = table.momentum_grid.nodes[index]
    quadrature = get_angular_quadrature(default_angular_nodes(table.l_max))
    legendre = quadrature.legendre_matrix(table.l_max)
    values = np.zeros((table.l_max + 1, radii.size), dtype=np.complex128)
    slopes = np.zeros_like(values)
    x = k * radii

    for l in range(table.l_max + 1):
        phase_shift = table.phase_shifts[l, index]
        regular, regular_slope = riccati_j_with_derivative(l, x)
        irregular, irregular_slope = riccati_y_with_derivative(l, x)
        scattered = np.exp(1j * phase_shift) * (np.cos(phase_shift) * regular - np.sin(phase_shift) * irregular)
        scattered_slope = np.exp(1j * phase_shift) * (
            np.cos(phase_shift) * regular_slope - np.sin(phase_shift) * irregular_slope
        )
        scattered, scattered_slope = scattered - regular, scattered_slope - regular_slope
        prefactor = (2 * l + 1) * 1j ** l
        values[l] = prefactor * scattered / x
        slopes[l] = prefactor * (k * scattered_slope - scattered / radii) / x

    outgoing = radii[None, :] * (legendre @ slopes - 1j * k * (legendre @ values))
    return np.max(np.abs(outgoing), axis=0)
