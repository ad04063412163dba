from dataclasses import dataclass
from typing import Optional

from exceptions import ConfigurationError
from grids.axisymmetric_field import AxisymmetricField
from models.operator_kind import OperatorKind
from waveop.wave_operator import RadialWeight, wave_operator, wave_operator_adjoint, propagator, \
    commutator_radial, op_R3, op_E
from waveop.wave_operator_tables import WaveOperatorTables


@dataclass(eq=False)
class OperatorHandle:
    kind: OperatorKind
    tables: WaveOperatorTables
    time: Optional[float] = None
    weight: Optional[RadialWeight] = None

    def __post_init__(self):
        if self.kind == OperatorKind.PROPAGATOR and self.time is None:
            raise ConfigurationError("A propagator handle needs a time")

        if self.kind == OperatorKind.COMMUTATOR and self.weight is None:
            raise ConfigurationError("A commutator handle needs a radial weight")

    def __call__(self, f: AxisymmetricField) -> AxisymmetricField:
        if self.kind == OperatorKind.OMEGA:
            return wave_operator(f, self.tables)

        if self.kind == OperatorKind.OMEGA_ADJOINT:
            return wave_operator_adjoint(f, self.tables)

        if self.kind == OperatorKind.PROPAGATOR:
            return propagator(f, self.time, self.tables.distorted)

        if self.kind == OperatorKind.COMMUTATOR:
            return commutator_radial(f, self.weight, self.tables)

        if self.kind == OperatorKind.R3:
            return op_R3(f, self.tables)

        return op_E(f, self.tables)

    @property
    def name(self) -> str:
        if self.kind == OperatorKind.PROPAGATOR:
            return f'{self.kind.value}(t={self.time:g})'

        return self.kind.value
