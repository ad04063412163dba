from dataclasses import dataclass, field
from typing import List

from dataclasses_json import dataclass_json

from consts.report_consts import HARNESS_LIMITATION
from exceptions import ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import cos_theta, multiply_fields, multiply_radial_weight
from transform.field_families import FamilyMember
from waveop.harness_report import norm_ratio_harness
from waveop.wave_operator import commutator_radial, wave_operator
from waveop.wave_operator_tables import WaveOperatorTables


@dataclass_json
@dataclass
class DirectionalContrastReport:
    parameters: List[float]
    radial_ratios: List[float]
    directional_ratios: List[float]
    p: float
    q: float
    dropped_mass: float
    limitation: str = field(default=HARNESS_LIMITATION)


def directional_contrast(family: List[FamilyMember],
                         tables: WaveOperatorTables,
                         p: float = 2.0,
                         q: float = 2.2) -> DirectionalContrastReport:
    """
    ‖[z, Ω]f_λ‖_q/‖f_λ‖_p with the non-radial weight z = r·cosθ, next to the radial |x| ratios. Report only:
    Ω does not preserve directions, so only the radial column is expected to stay flat.
    """
    if tables.l_max < 1:
        raise ShapeMismatchError("The directional contrast needs tables with L ≥ 1")

    radial = norm_ratio_harness('radial', family, lambda f: commutator_radial(f, lambda r: r, tables), p, q)
    directional = norm_ratio_harness('directional', family, lambda f: _height_commutator(f, tables), p, q)

    return DirectionalContrastReport(
        parameters=radial.parameters,
        radial_ratios=radial.ratios,
        directional_ratios=directional.ratios,
        p=p,
        q=q,
        dropped_mass=max(radial.dropped_mass, directional.dropped_mass)
    )


def _height_commutator(f: AxisymmetricField, tables: WaveOperatorTables) -> AxisymmetricField:
    return _multiply_height(wave_operator(f, tables), tables.l_max) - \
        wave_operator(_multiply_height(f, tables.l_max), tables)


def _multiply_height(f: AxisymmetricField, l_max: int) -> AxisymmetricField:
    return multiply_radial_weight(multiply_fields(f, cos_theta(f), l_max=l_max), lambda r: r)
