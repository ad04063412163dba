import numpy as np
from tqdm import tqdm

from consts.grid_consts import TAIL_REGION_FRACTION
from consts.nls_consts import BOUNDARY_MASS_LIMIT, X_NORM_ABORT_FACTOR, STRIDE_MATCH_TOLERANCE
from exceptions import BlowupError, BoundaryContaminationError, ConfigurationError, DomainError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import lp_norm
from nls.profile import profile, x_norm
from nls.strang_stepper import nonlinear_substep
from nls.trajectory import SnapshotDiagnostics, Trajectory
from tools.logging import logger
from waveop.wave_operator import propagator
from waveop.wave_operator_tables import WaveOperatorTables


def evolve(u0: AxisymmetricField,
           final_time: float,
           dt: float,
           tables: WaveOperatorTables,
           snapshot_stride: float,
           nonlinear: bool = True) -> Trajectory:
    """
    Strang-split evolution of i∂ₜu − Δu + Vu = ū² with diagnostics at every multiple of `snapshot_stride`.
    Consecutive linear half steps are merged, so only snapshot times pay for two of them.
    """
    steps_per_snapshot, snapshot_count = _validate_schedule(final_time, dt, snapshot_stride)
    trajectory = Trajectory(dt=dt, nonlinear=nonlinear)
    u = u0
    initial_x = None

    logger.info(f"Starting to evolve over t ∈ [0, {final_time:g}] with dt={dt:g} ({'nonlinear' if nonlinear else 'linear'})")
    with tqdm(total=snapshot_count * steps_per_snapshot) as progress_bar:
        for snapshot in range(snapshot_count + 1):
            time = snapshot * steps_per_snapshot * dt

            if snapshot > 0:
                u = _advance(u, steps_per_snapshot, dt, tables, nonlinear, time - steps_per_snapshot * dt)
                progress_bar.update(steps_per_snapshot)

            diagnostics = _diagnose(u, time, tables)
            trajectory.append(u, profile(u, time, tables.distorted), diagnostics)
            initial_x = diagnostics.x_total if initial_x is None else initial_x
            _monitor(trajectory, diagnostics, initial_x)

    return trajectory


def _validate_schedule(final_time: float, dt: float, snapshot_stride: float):
    if not dt > 0:
        raise DomainError(f"Time steps must be positive, got {dt}")

    if final_time < 0:
        raise DomainError(f"Final time must be non-negative, got {final_time}")

    steps_per_snapshot = int(round(snapshot_stride / dt))

    if steps_per_snapshot < 1 or abs(steps_per_snapshot * dt - snapshot_stride) > STRIDE_MATCH_TOLERANCE:
        raise ConfigurationError(f"Snapshot stride {snapshot_stride} is not a positive multiple of dt={dt}")

    snapshot_count = int(np.floor(final_time / snapshot_stride + STRIDE_MATCH_TOLERANCE))
    return steps_per_snapshot, snapshot_count


def _advance(u: AxisymmetricField,
             steps: int,
             dt: float,
             tables: WaveOperatorTables,
             nonlinear: bool,
             start_time: float) -> AxisymmetricField:
    table = tables.distorted

    if not nonlinear:
        return propagator(u, steps * dt, table)

    u = propagator(u, dt / 2, table)

    for index in range(steps):
        u = nonlinear_substep(u, dt, start_time + (index + 0.5) * dt)
        u = propagator(u, dt if index < steps - 1 else dt / 2, table)

    return u


def _diagnose(u: AxisymmetricField, time: float, tables: WaveOperatorTables) -> SnapshotDiagnostics:
    report = x_norm(u, time, tables)
    return SnapshotDiagnostics(
        time=time,
        l2=lp_norm(u, 2),
        l4=lp_norm(u, 4),
        l6=lp_norm(u, 6),
        x_h1=report.h1,
        x_weight=report.weight,
        boundary_mass=u.tail_mass(TAIL_REGION_FRACTION)
    )


def _monitor(trajectory: Trajectory, diagnostics: SnapshotDiagnostics, initial_x: float) -> None:
    if diagnostics.boundary_mass > BOUNDARY_MASS_LIMIT:
        trajectory.valid = False
        raise BoundaryContaminationError(diagnostics.time, diagnostics.boundary_mass)

    if initial_x > 0 and diagnostics.x_total > X_NORM_ABORT_FACTOR * initial_x:
        trajectory.valid = False
        raise BlowupError(
            diagnostics.time,
            f"X-norm {diagnostics.x_total:.4g} exceeds {X_NORM_ABORT_FACTOR:g}× its initial value at "
            f"t={diagnostics.time:.6g}"
        )
