from enum import Enum


class OperatorKind(Enum):
    OMEGA = 'omega'
    OMEGA_ADJOINT = 'omega_adjoint'
    PROPAGATOR = 'propagator'
    COMMUTATOR = 'commutator'
    R3 = 'R3'
    E = 'E'
