from dataclasses import dataclass
from typing import List, Optional

from models.potential_form import PotentialForm
from scattering.potential import Potential


@dataclass
class PotentialConfig:
    form: PotentialForm = PotentialForm.GAUSSIAN
    amplitude: float = 1.0
    width: float = 1.0
    table_radii: Optional[List[float]] = None
    table_profile: Optional[List[float]] = None

    def to_potential(self) -> Potential:
        return Potential(
            form=self.form,
            amplitude=self.amplitude,
            width=self.width,
            table_radii=tuple(self.table_radii) if self.table_radii is not None else None,
            table_profile=tuple(self.table_profile) if self.table_profile is not None else None
        )
