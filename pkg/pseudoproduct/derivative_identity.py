from dataclasses import dataclass

from consts.pseudoproduct_consts import INCONCLUSIVE_DROPPED_MASS
from exceptions import ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import inner_product, multiply_fields
from tools.logging import logger
from waveop.wave_operator import conjugated_radius, op_E, op_R3
from waveop.wave_operator_tables import WaveOperatorTables


@dataclass
class DerivativeIdentityReport:
    lhs: complex
    rhs: complex
    defect: float
    dropped_mass: float
    inconclusive: bool


def derivative_identity(f: AxisymmetricField,
                        g: AxisymmetricField,
                        h: AxisymmetricField,
                        tables: WaveOperatorTables) -> DerivativeIdentityReport:
    """
    Compares ∫ f g (Ω|x|Ω*)(𝓡³h) dx with ∫ (Ω|x|Ω*f) g 𝓡³h dx + ∫ (𝓔f) g 𝓡³h dx − ∫ f g 𝓔(𝓡³h) dx, the two
    sides of moving |x| across Ω inside the trilinear pairing.
    """
    if tables.l_max < 1:
        raise ShapeMismatchError("The derivative identity needs L ≥ 1 to hold 𝓡³h")

    rotated = op_R3(h, tables)
    lhs = _triple_integral(f, g, conjugated_radius(rotated, tables), tables.l_max)
    rhs = _triple_integral(conjugated_radius(f, tables), g, rotated, tables.l_max) + \
        _triple_integral(op_E(f, tables), g, rotated, tables.l_max) - \
        _triple_integral(f, g, op_E(rotated, tables), tables.l_max)
    scale = abs(lhs) + abs(rhs)
    defect = abs(lhs - rhs) / scale if scale > 0 else 0.0
    dropped_share = rotated.dropped_mass / (rotated.mass() + rotated.dropped_mass) if rotated.dropped_mass else 0.0
    inconclusive = dropped_share > INCONCLUSIVE_DROPPED_MASS

    if inconclusive:
        logger.warning(f"Derivative identity is inconclusive: 𝓡³h dropped {dropped_share:.2%} of its mass")

    return DerivativeIdentityReport(
        lhs=lhs,
        rhs=rhs,
        defect=defect,
        dropped_mass=dropped_share,
        inconclusive=inconclusive
    )


def derivative_identity_defect(f: AxisymmetricField,
                               g: AxisymmetricField,
                               h: AxisymmetricField,
                               tables: WaveOperatorTables) -> float:
    return derivative_identity(f, g, h, tables).defect


def _triple_integral(first: AxisymmetricField,
                     second: AxisymmetricField,
                     third: AxisymmetricField,
                     l_max: int) -> complex:
    """∫ f g h dx, the product f·g kept up to the channels `third` can pair with."""
    product = multiply_fields(first, second, l_max=max(l_max, third.l_max))
    return inner_product(product, third.conj())
