from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from dataclasses_json import dataclass_json

from grids.field_algebra import l2_norm
from grids.spectral_field import SpectralField
from nls.trajectory import Trajectory
from waveop.wave_operator import wave_operator_adjoint
from waveop.wave_operator_tables import WaveOperatorTables


@dataclass_json
@dataclass
class ScatteringReport:
    profile_defect: float
    flat_profile_defect: Optional[float]
    increment_times: List[float]
    increments: List[float]
    monotone: bool
    final_increment: float
    drift: float


def scattering_defect(trajectory: Trajectory, tables: Optional[WaveOperatorTables] = None) -> ScatteringReport:
    """
    sup over tail pairs t₁ < t₂ (both ≥ T/2) of ‖f(t₂) − f(t₁)‖₂, the doubling increments ‖f(2t) − f(t)‖₂ over the
    snapshot times with 2t on the record, and the drift ‖f(T) − u₀♯‖₂. With `tables` the same tail supremum is taken
    for the flat profiles e^{−itk²}𝓕(Ω*u(t)).
    """
    tail = [index for index, t in enumerate(trajectory.times) if t >= trajectory.final_time / 2]
    profile_defect = _tail_supremum([trajectory.profiles[index] for index in tail])
    flat_defect = None

    if tables is not None:
        flat_profiles = [_flat_profile(trajectory, index, tables) for index in tail]
        flat_defect = _tail_supremum(flat_profiles)

    increment_times, increments = _doubling_increments(trajectory)
    monotone = bool(np.all(np.diff(increments) <= 0)) if increments else True
    drift = (trajectory.profiles[-1] - trajectory.initial_profile).norm()

    return ScatteringReport(
        profile_defect=profile_defect,
        flat_profile_defect=flat_defect,
        increment_times=increment_times,
        increments=increments,
        monotone=monotone,
        final_increment=increments[-1] if increments else 0.0,
        drift=drift
    )


def relative_final_increment(report: ScatteringReport, trajectory: Trajectory) -> float:
    norm = l2_norm(trajectory.initial_datum)
    return report.final_increment / norm if norm > 0 else 0.0


def _tail_supremum(profiles: List[SpectralField]) -> float:
    worst = 0.0

    for first_index, first in enumerate(profiles):
        for second in profiles[first_index + 1:]:
            worst = max(worst, (second - first).norm())

    return worst


def _flat_profile(trajectory: Trajectory, index: int, tables: WaveOperatorTables) -> SpectralField:
    t = trajectory.times[index]
    pulled = wave_operator_adjoint(trajectory.snapshots[index], tables)
    phases = np.exp(-1j * t * tables.momentum_grid.nodes ** 2)

    return tables.flat_transform.forward(pulled).multiply(phases)


def _doubling_increments(trajectory: Trajectory):
    """Increments for t = T/2, T/4, ... down to the first positive snapshot, returned in increasing t."""
    times = np.asarray(trajectory.times)
    increment_times, increments = [], []
    t = trajectory.final_time / 2

    if times.size < 2:
        return increment_times, increments

    while t >= times[1]:
        first, second = _nearest(times, t), _nearest(times, 2 * t)

        if first < second:
            increment_times.append(float(times[first]))
            increments.append((trajectory.profiles[second] - trajectory.profiles[first]).norm())

        t /= 2

    return increment_times[::-1], increments[::-1]


def _nearest(times: np.ndarray, t: float) -> int:
    return int(np.argmin(np.abs(times - t)))
