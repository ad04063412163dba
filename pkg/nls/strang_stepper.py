from dataclasses import dataclass

import numpy as np

from consts.nls_consts import CONVERGENCE_FINAL_TIME, CONVERGENCE_REFERENCE_REFINEMENT
from consts.typing_consts import ComplexArray
from exceptions import BlowupError, DomainError
from grids.angular_quadrature import default_angular_nodes, get_angular_quadrature
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm
from scattering.scattering_table import ScatteringTable
from waveop.wave_operator import propagator


@dataclass
class ConvergenceReport:
    dt: float
    coarse_error: float
    fine_error: float
    ratio: float
    order: float


def step_strang(u: AxisymmetricField,
                dt: float,
                table: ScatteringTable,
                nonlinear: bool = True,
                time: float = 0.0) -> AxisymmetricField:
    """e^{i(dt/2)H} ∘ Φ_dt ∘ e^{i(dt/2)H}, Φ the flow of u' = −iū²; without the nonlinearity the exact linear step."""
    if not dt > 0:
        raise DomainError(f"Time steps must be positive, got {dt}")

    if not nonlinear:
        return propagator(u, dt, table)

    half = propagator(u, dt / 2, table)
    return propagator(nonlinear_substep(half, dt, time), dt / 2, table)


def nonlinear_substep(u: AxisymmetricField, dt: float, time: float = 0.0) -> AxisymmetricField:
    """One classical RK4 step of u' = −iū² at every collocation point, projected back to u's channels."""
    n_mu = max(default_angular_nodes(u.l_max), 2 * u.l_max + 1)
    quadrature = get_angular_quadrature(n_mu)
    values = u.to_collocation(quadrature)

    first = _conjugate_square(values)
    second = _conjugate_square(values + 0.5 * dt * first)
    third = _conjugate_square(values + 0.5 * dt * second)
    fourth = _conjugate_square(values + dt * third)
    stepped = values + dt / 6 * (first + 2 * second + 2 * third + fourth)

    if not np.all(np.isfinite(stepped)):
        raise BlowupError(time)

    result = AxisymmetricField.from_collocation(stepped, u.grid, u.l_max, quadrature)
    result.dropped_mass = u.dropped_mass

    return result


def self_convergence_order(u0: AxisymmetricField,
                           dt: float,
                           table: ScatteringTable,
                           final_time: float = CONVERGENCE_FINAL_TIME,
                           refinement: int = CONVERGENCE_REFERENCE_REFINEMENT) -> ConvergenceReport:
    """Errors at `final_time` for dt and dt/2 against a dt/refinement reference; order = log₂ of their ratio."""
    reference = _integrate(u0, dt / refinement, final_time, table)
    coarse_error = l2_norm(_integrate(u0, dt, final_time, table) - reference)
    fine_error = l2_norm(_integrate(u0, dt / 2, final_time, table) - reference)

    if fine_error == 0:
        return ConvergenceReport(dt, coarse_error, fine_error, float('inf'), float('inf'))

    ratio = coarse_error / fine_error
    return ConvergenceReport(dt, coarse_error, fine_error, ratio, float(np.log2(ratio)))


def _integrate(u0: AxisymmetricField, dt: float, final_time: float, table: ScatteringTable) -> AxisymmetricField:
    steps = int(round(final_time / dt))
    u = u0

    for index in range(steps):
        u = step_strang(u, dt, table, time=index * dt)

    return u


def _conjugate_square(values: ComplexArray) -> ComplexArray:
    with np.errstate(over='ignore', invalid='ignore'):
        return -1j * np.conj(values) ** 2
