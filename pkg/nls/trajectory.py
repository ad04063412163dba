from dataclasses import dataclass, field
from typing import List, Optional

import pandas as pd
from dataclasses_json import dataclass_json

from consts.nls_consts import TIME, L2_NORM, L4_NORM, L6_NORM, X_H1, X_WEIGHT, BOUNDARY_MASS, DUHAMEL_RESIDUAL
from exceptions import DomainError
from grids.axisymmetric_field import AxisymmetricField
from grids.spectral_field import SpectralField


@dataclass_json
@dataclass
class SnapshotDiagnostics:
    time: float
    l2: float
    l4: float
    l6: float
    x_h1: float
    x_weight: float
    boundary_mass: float
    duhamel_residual: Optional[float] = None

    @property
    def x_total(self) -> float:
        return self.x_h1 + self.x_weight


@dataclass
class Trajectory:
    """Append-only record of u(t_m), the profiles f♯(t_m) = e^{−it_m k²}u♯(t_m) and their diagnostics."""
    dt: float
    nonlinear: bool
    times: List[float] = field(default_factory=list)
    snapshots: List[AxisymmetricField] = field(default_factory=list)
    profiles: List[SpectralField] = field(default_factory=list)
    diagnostics: List[SnapshotDiagnostics] = field(default_factory=list)
    valid: bool = True

    def append(self, u: AxisymmetricField, profile: SpectralField, diagnostics: SnapshotDiagnostics) -> None:
        if self.times and diagnostics.time <= self.times[-1]:
            raise DomainError(f"Snapshot time {diagnostics.time} does not follow {self.times[-1]}")

        self.times.append(diagnostics.time)
        self.snapshots.append(u)
        self.profiles.append(profile)
        self.diagnostics.append(diagnostics)

    @property
    def initial_datum(self) -> AxisymmetricField:
        return self.snapshots[0]

    @property
    def initial_profile(self) -> SpectralField:
        return self.profiles[0]

    @property
    def final_time(self) -> float:
        return self.times[-1]

    def record_duhamel_residuals(self, residuals: List[float]) -> None:
        for diagnostics, residual in zip(self.diagnostics, residuals):
            diagnostics.duhamel_residual = residual

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            TIME: [d.time for d in self.diagnostics],
            L2_NORM: [d.l2 for d in self.diagnostics],
            L4_NORM: [d.l4 for d in self.diagnostics],
            L6_NORM: [d.l6 for d in self.diagnostics],
            X_H1: [d.x_h1 for d in self.diagnostics],
            X_WEIGHT: [d.x_weight for d in self.diagnostics],
            BOUNDARY_MASS: [d.boundary_mass for d in self.diagnostics],
            DUHAMEL_RESIDUAL: [d.duhamel_residual for d in self.diagnostics]
        })
