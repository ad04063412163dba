from typing import Optional, Union

import numpy as np

from consts.typing_consts import RadialFunction, RealArray
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import cos_theta, multiply_fields, multiply_radial_weight
from scattering.scattering_table import ScatteringTable
from tools.logging import logger
from transform.multiplier_operators import apply_multiplier
from transform.multiplier_spec import MultiplierSpec
from waveop.wave_operator_tables import WaveOperatorTables

RadialWeight = Union[RadialFunction, RealArray]


def wave_operator(f: AxisymmetricField, tables: WaveOperatorTables) -> AxisymmetricField:
    """Ω = 𝓕♯⁻¹𝓕; exactly the identity when V = 0."""
    if tables.is_free:
        return f

    return tables.distorted_transform.inverse(tables.flat_transform.forward(f))


def wave_operator_adjoint(f: AxisymmetricField, tables: WaveOperatorTables) -> AxisymmetricField:
    """Ω* = 𝓕⁻¹𝓕♯."""
    if tables.is_free:
        return f

    return tables.flat_transform.inverse(tables.distorted_transform.forward(f))


def propagator_multiplier(t: float) -> MultiplierSpec:
    return MultiplierSpec(symbol=lambda k: np.exp(1j * t * np.asarray(k) ** 2))


def propagator(f: AxisymmetricField, t: float, table: ScatteringTable) -> AxisymmetricField:
    """e^{itH}f as the multiplier e^{itk²}."""
    if t == 0:
        return f

    return apply_multiplier(f, propagator_multiplier(t), table)


def commutator_radial(f: AxisymmetricField, weight: RadialWeight, tables: WaveOperatorTables) -> AxisymmetricField:
    """[a(x), Ω]f = a·Ωf − Ω(a·f)."""
    if not weight_slope_ok(weight, f):
        logger.warning("Commutator weight violates |a'| ≤ 1 on the grid")

    return multiply_radial_weight(wave_operator(f, tables), weight) - \
        wave_operator(multiply_radial_weight(f, weight), tables)


def weight_slope_ok(weight: RadialWeight, f: AxisymmetricField) -> bool:
    nodes = f.grid.nodes
    values = weight(nodes) if callable(weight) else np.broadcast_to(np.asarray(weight, dtype=float), nodes.shape)
    slopes = np.gradient(values, nodes)

    return bool(np.all(np.abs(slopes) <= 1 + 1e-9))


def op_R3(f: AxisymmetricField, tables: WaveOperatorTables, l_max: Optional[int] = None) -> AxisymmetricField:
    """𝓡³ = Ω (x₃/|x|) Ω*, i.e. cosθ conjugated by Ω, with channels capped at the tables' L."""
    l_max = tables.l_max if l_max is None else min(l_max, tables.l_max)
    pulled = wave_operator_adjoint(f, tables)
    rotated = multiply_fields(pulled, cos_theta(pulled), l_max=l_max)

    return wave_operator(rotated, tables)


def op_E(f: AxisymmetricField, tables: WaveOperatorTables) -> AxisymmetricField:
    """𝓔 = [|x|, Ω]Ω* = |x|·ΩΩ*f − Ω(|x|·Ω*f)."""
    pulled = wave_operator_adjoint(f, tables)
    return multiply_radial_weight(wave_operator(pulled, tables), _radius) - \
        wave_operator(multiply_radial_weight(pulled, _radius), tables)


def op_E_by_commutator(f: AxisymmetricField, tables: WaveOperatorTables) -> AxisymmetricField:
    return commutator_radial(wave_operator_adjoint(f, tables), _radius, tables)


def op_E_reduced(f: AxisymmetricField, tables: WaveOperatorTables) -> AxisymmetricField:
    """|x|f − Ω|x|Ω*f, equal to 𝓔f up to the unitarity defect ΩΩ* − I."""
    return multiply_radial_weight(f, _radius) - \
        wave_operator(multiply_radial_weight(wave_operator_adjoint(f, tables), _radius), tables)


def conjugated_radius(f: AxisymmetricField, tables: WaveOperatorTables) -> AxisymmetricField:
    """Ω|x|Ω*f."""
    return wave_operator(multiply_radial_weight(wave_operator_adjoint(f, tables), _radius), tables)


def _radius(r: RealArray) -> RealArray:
    return r
