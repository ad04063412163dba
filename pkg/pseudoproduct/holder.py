from dataclasses import dataclass, field
from typing import List, Tuple

from dataclasses_json import dataclass_json

from consts.pseudoproduct_consts import HOLDER_EPSILON, EXPONENT_TOLERANCE
from consts.report_consts import HARNESS_LIMITATION
from exceptions import ConfigurationError, DegenerateInputError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import lp_norm
from pseudoproduct.pseudo_product import apply_T
from pseudoproduct.separable_symbol import SeparableSymbol
from scattering.scattering_table import ScatteringTable
from transform.field_families import FamilyMember
from utils.numeric_utils import spread_ratio


@dataclass_json
@dataclass
class HolderReport:
    symbol: str
    p: float
    q: float
    r_prime: float
    parameters: List[float]
    ratios: List[float]
    max_ratio: float
    spread: float
    dropped_mass: float
    limitation: str = field(default=HARNESS_LIMITATION)


def validate_holder_exponents(p: float, q: float, r_prime: float) -> None:
    if min(p, q, r_prime) < 1:
        raise ConfigurationError(f"Hölder exponents must be at least 1, got p={p}, q={q}, r′={r_prime}")

    if abs(1 / r_prime - 1 / p - 1 / q) > EXPONENT_TOLERANCE:
        raise ConfigurationError(f"Exponents violate 1/r′ = 1/p + 1/q: p={p}, q={q}, r′={r_prime}")


def shifted_exponents(p: float, q: float, epsilon: float = HOLDER_EPSILON) -> Tuple[float, float]:
    """(q̃, p̃) with 1/q̃ = 1/q + ε and 1/p̃ = 1/p − ε, or the opposite shift when that leaves [0, 1]."""
    for sign in (1, -1):
        inverse_q, inverse_p = 1 / q + sign * epsilon, 1 / p - sign * epsilon

        if 0 < inverse_q <= 1 and 0 < inverse_p <= 1:
            return 1 / inverse_q, 1 / inverse_p

    raise ConfigurationError(f"No ε = {epsilon} shift of (q, p) = ({q}, {p}) stays within [1, ∞)")


def holder_ratio(f: AxisymmetricField,
                 g: AxisymmetricField,
                 symbol: SeparableSymbol,
                 p: float,
                 q: float,
                 r_prime: float,
                 table: ScatteringTable,
                 epsilon: float = HOLDER_EPSILON) -> float:
    """‖T(f, g)‖_{r′} / (‖f‖_q‖g‖_p + ‖f‖_{q̃}‖g‖_{p̃})."""
    validate_holder_exponents(p, q, r_prime)
    shifted_q, shifted_p = shifted_exponents(p, q, epsilon)
    denominator = lp_norm(f, q) * lp_norm(g, p) + lp_norm(f, shifted_q) * lp_norm(g, shifted_p)

    if denominator == 0:
        raise DegenerateInputError("Both Hölder products vanish; the ratio is undefined")

    return lp_norm(apply_T(f, g, symbol, table), r_prime) / denominator


def holder_family_report(name: str,
                         family: List[FamilyMember],
                         symbol: SeparableSymbol,
                         p: float,
                         q: float,
                         r_prime: float,
                         table: ScatteringTable) -> HolderReport:
    """Hölder ratios of T(f_λ, f_λ) along a dilation family."""
    validate_holder_exponents(p, q, r_prime)
    ratios = [holder_ratio(member.field, member.field, symbol, p, q, r_prime, table) for member in family]

    return HolderReport(
        symbol=name,
        p=p,
        q=q,
        r_prime=r_prime,
        parameters=[member.parameter for member in family],
        ratios=ratios,
        max_ratio=max(ratios),
        spread=spread_ratio(ratios),
        dropped_mass=max(member.field.dropped_mass for member in family)
    )
