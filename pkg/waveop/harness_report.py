from dataclasses import dataclass, field
from typing import Callable, List, Optional

from dataclasses_json import dataclass_json

from consts.report_consts import HARNESS_LIMITATION
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import lp_norm
from transform.field_families import FamilyMember
from utils.numeric_utils import spread_ratio


@dataclass_json
@dataclass
class HarnessReport:
    family: str
    p: float
    q: float
    parameters: List[float]
    ratios: List[float]
    max_ratio: float
    spread: float
    dropped_mass: float
    limitation: str = field(default=HARNESS_LIMITATION)


def norm_ratio_harness(name: str,
                       family: List[FamilyMember],
                       operator: Callable[[AxisymmetricField], AxisymmetricField],
                       p: float,
                       q: Optional[float] = None) -> HarnessReport:
    """‖operator(f)‖_q / ‖f‖_p over the family members."""
    q = p if q is None else q
    ratios, dropped = [], 0.0

    for member in family:
        image = operator(member.field)
        ratios.append(lp_norm(image, q) / lp_norm(member.field, p))
        dropped = max(dropped, image.dropped_mass)

    return HarnessReport(
        family=name,
        p=p,
        q=q,
        parameters=[member.parameter for member in family],
        ratios=ratios,
        max_ratio=max(ratios),
        spread=spread_ratio(ratios),
        dropped_mass=dropped
    )
