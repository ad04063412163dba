from dataclasses import dataclass

import numpy as np
from dataclasses_json import dataclass_json

from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm, multiply_radial_weight
from grids.spectral_field import SpectralField
from scattering.scattering_table import ScatteringTable
from transform.distorted_fourier_transform import get_transform
from transform.multiplier_operators import sobolev_norm
from waveop.wave_operator import wave_operator_adjoint
from waveop.wave_operator_tables import WaveOperatorTables


@dataclass_json
@dataclass
class XNormReport:
    h1: float
    weight: float
    total: float


def profile(u: AxisymmetricField, t: float, table: ScatteringTable) -> SpectralField:
    """f♯ = e^{−itk²}·u♯."""
    spectral = get_transform(table).forward(u)

    if t == 0:
        return spectral

    return spectral.multiply(np.exp(-1j * t * table.momentum_grid.nodes ** 2))


def x_norm(u: AxisymmetricField, t: float, tables: WaveOperatorTables) -> XNormReport:
    """‖f‖_{H¹♯} + ‖|x|Ω*f‖₂ for the profile f = e^{−itH}u."""
    pulled_back = tables.distorted_transform.inverse(profile(u, t, tables.distorted))
    return profile_x_norm(pulled_back, tables)


def profile_x_norm(f: AxisymmetricField, tables: WaveOperatorTables) -> XNormReport:
    h1 = sobolev_norm(f, 1, 2, False, tables.distorted)
    weight = l2_norm(multiply_radial_weight(wave_operator_adjoint(f, tables), lambda r: r))

    return XNormReport(h1=h1, weight=weight, total=h1 + weight)


def spectral_x_norm(u: AxisymmetricField, t: float, table: ScatteringTable) -> float:
    """‖f♯‖₂ + ‖k f♯‖₂ + ‖∂_k f♯‖₂ on channel 0, with centred differences in k."""
    momenta = table.momentum_grid.nodes
    channel = profile(u, t, table).channels[0]
    derivative = np.gradient(channel, momenta, edge_order=2)

    pieces = [channel, momenta * channel, derivative]
    return float(sum(SpectralField(piece, table.momentum_grid).norm() for piece in pieces))
