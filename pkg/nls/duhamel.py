from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from dataclasses_json import dataclass_json
from scipy.integrate import simpson

from consts.nls_consts import QUADRATURE_TOLERANCE, RICHARDSON_SIMPSON_FACTOR, DEFAULT_SPECTRAL_MATCH_TIME, \
    DEFAULT_COARSE_R_MAX, DEFAULT_COARSE_K_MAX, DEFAULT_COARSE_N_K, STRIDE_MATCH_TOLERANCE
from consts.typing_consts import ComplexArray
from exceptions import ConfigurationError, ShapeMismatchError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm, multiply_fields
from grids.grid_factory import make_grids
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from grids.spectral_field import SpectralField
from nls.profile import profile
from nls.resonance import phase_symbol
from nls.trajectory import Trajectory
from pseudoproduct.m_kernel import MKernel
from scattering.scattering_table import ScatteringTable
from tools.logging import logger
from transform.distorted_fourier_transform import get_transform


@dataclass_json
@dataclass
class DuhamelReport:
    residual: float
    residuals: List[float]
    quadrature_estimate: float
    inconclusive: bool


@dataclass_json
@dataclass
class SpectralDuhamelReport:
    discrepancy: float
    times: List[float]
    discrepancies: List[float]


def duhamel_integrals(trajectory: Trajectory, table: ScatteringTable) -> List[SpectralField]:
    """B(t_m) = ∫₀^{t_m} e^{−isk²}(ū(s)²)♯ ds by Simpson over the snapshots; zero for a linear run."""
    integrands = _physical_integrands(trajectory, table, trajectory.snapshots)
    return [SpectralField(values, table.momentum_grid) for values in _cumulative_simpson(integrands, trajectory.times)]


def duhamel_residual_physical(trajectory: Trajectory, table: ScatteringTable) -> DuhamelReport:
    """max_m ‖f♯(t_m) − u₀♯ + iB(t_m)‖₂ / ‖u₀‖₂, with |S_h − S_{2h}|/15 at the last usable time as quadrature check."""
    logger.info("Starting to evaluate the physical Duhamel residual")
    initial_norm = l2_norm(trajectory.initial_datum)
    integrands = _physical_integrands(trajectory, table, trajectory.snapshots)
    integrals = _cumulative_simpson(integrands, trajectory.times)

    if initial_norm == 0:
        return DuhamelReport(0.0, [0.0] * len(trajectory.times), 0.0, False)

    initial = trajectory.initial_profile
    residuals = [
        (profile_m - initial + SpectralField(1j * integral, table.momentum_grid)).norm() / initial_norm
        for profile_m, integral in zip(trajectory.profiles, integrals)
    ]
    estimate = _quadrature_estimate(integrands, trajectory.times, table.momentum_grid) / initial_norm
    inconclusive = not estimate <= QUADRATURE_TOLERANCE

    if inconclusive:
        logger.warning(f"Snapshot stride too coarse for the Duhamel quadrature: self-estimate {estimate:.2e}")

    return DuhamelReport(max(residuals), residuals, estimate, inconclusive)


def coarse_grids(radial_grid: RadialGrid,
                 r_max: float = DEFAULT_COARSE_R_MAX,
                 k_max: float = DEFAULT_COARSE_K_MAX,
                 n_k: int = DEFAULT_COARSE_N_K) -> Tuple[RadialGrid, MomentumGrid]:
    """The leading radial nodes of `radial_grid` up to `r_max`, paired with a coarse momentum grid."""
    n_r = int(round(r_max / radial_grid.spacing))

    if not 0 < n_r <= radial_grid.n_r:
        raise ConfigurationError(f"Coarse radius {r_max} does not fit the radial grid {radial_grid}")

    return make_grids(n_r * radial_grid.spacing, n_r, k_max, n_k)


def duhamel_residual_spectral(trajectory: Trajectory,
                              kernel: MKernel,
                              coarse_table: ScatteringTable,
                              match_time: float = DEFAULT_SPECTRAL_MATCH_TIME) -> SpectralDuhamelReport:
    """
    Relative discrepancy at t ≤ match_time between B realized from the conjugated M kernel,
        ∫₀^t ∑_{j,l} e^{−isφ(k, k_j, k_l)} conj(f♯(s, k_j)) conj(f♯(s, k_l)) conj(M(k, k_j, k_l)) k_j²k_l² dk_j dk_l ds,
    and the physical B of the same trajectory sampled on the coarse momentum grid.
    """
    momentum_grid = coarse_table.momentum_grid

    if kernel.momentum_grid != momentum_grid:
        raise ShapeMismatchError(f"M kernel grid {kernel.momentum_grid} does not match the coarse {momentum_grid}")

    n_r = _validate_prefix(trajectory.initial_datum.grid, coarse_table.radial_grid)
    matched = [index for index, t in enumerate(trajectory.times) if t <= match_time + STRIDE_MATCH_TOLERANCE]

    if len(matched) < 3:
        raise ConfigurationError(f"Only {len(matched)} snapshots lie in t ≤ {match_time}; the Simpson rule needs 3")

    logger.info(f"Starting to cross-check B on {momentum_grid.n_k}³ coarse momenta over {len(matched)} snapshots")
    times = [trajectory.times[index] for index in matched]
    restricted = [_restrict(trajectory.snapshots[index], coarse_table.radial_grid, n_r) for index in matched]
    physical = _cumulative_simpson(_physical_integrands(trajectory, coarse_table, restricted, times), times)
    spectral = _cumulative_simpson(_kernel_integrands(restricted, times, kernel, coarse_table), times)

    discrepancies = [
        _relative_norm(spectral_m - physical_m, physical_m, momentum_grid)
        for spectral_m, physical_m in zip(spectral, physical)
    ]
    return SpectralDuhamelReport(max(discrepancies), times, discrepancies)


def _physical_integrands(trajectory: Trajectory,
                         table: ScatteringTable,
                         snapshots: List[AxisymmetricField],
                         times: List[float] = None) -> ComplexArray:
    times = trajectory.times if times is None else times
    shape = (len(snapshots), snapshots[0].l_max + 1, table.momentum_grid.n_k)

    if not trajectory.nonlinear:
        return np.zeros(shape, dtype=np.complex128)

    transform = get_transform(table)
    integrands = np.empty(shape, dtype=np.complex128)

    for index, (u, t) in enumerate(zip(snapshots, times)):
        conjugate = u.conj()
        squared = transform.forward(multiply_fields(conjugate, conjugate, l_max=u.l_max))
        integrands[index] = squared.multiply(np.exp(-1j * t * table.momentum_grid.nodes ** 2)).channels

    return integrands


def _kernel_integrands(snapshots: List[AxisymmetricField],
                       times: List[float],
                       kernel: MKernel,
                       table: ScatteringTable) -> ComplexArray:
    momenta = table.momentum_grid.nodes
    conjugate_kernel = np.conj(kernel.values)
    integrands = np.empty((len(snapshots), 1, momenta.size), dtype=np.complex128)

    for index, (u, t) in enumerate(zip(snapshots, times)):
        profile_values = profile(u, t, table).channels[0]
        weighted = table.momentum_grid.volume_weights * np.conj(profile_values) * np.exp(-1j * t * momenta ** 2)
        contracted = np.einsum('kjl,j,l->k', conjugate_kernel, weighted, weighted, optimize=True)
        integrands[index, 0] = np.exp(-1j * t * phase_symbol(momenta, 0, 0)) * contracted

    return integrands


def _cumulative_simpson(values: ComplexArray, times: List[float]) -> List[ComplexArray]:
    """Running integrals at every sample of a uniform series: Simpson, closed by 3/8 or a quadratic end panel."""
    count = len(times)
    integrals = [np.zeros_like(values[0])]

    if count == 1:
        return integrals

    step = times[1] - times[0]

    for end in range(1, count):
        if end % 2 == 0:
            integrals.append(simpson(values[:end + 1], dx=step, axis=0))
        elif end >= 3:
            head = simpson(values[:end - 2], dx=step, axis=0) if end > 3 else 0
            tail = 3 * step / 8 * (values[end - 3] + 3 * values[end - 2] + 3 * values[end - 1] + values[end])
            integrals.append(head + tail)
        elif count > 2:
            integrals.append(step / 12 * (5 * values[0] + 8 * values[1] - values[2]))
        else:
            integrals.append(step / 2 * (values[0] + values[1]))

    return integrals


def _quadrature_estimate(values: ComplexArray, times: List[float], momentum_grid: MomentumGrid) -> float:
    end = (len(times) - 1) // 4 * 4

    if end < 4:
        return float('inf')

    step = times[1] - times[0]
    fine = simpson(values[:end + 1], dx=step, axis=0)
    coarse = simpson(values[:end + 1:2], dx=2 * step, axis=0)

    return SpectralField(fine - coarse, momentum_grid).norm() / RICHARDSON_SIMPSON_FACTOR


def _validate_prefix(fine: RadialGrid, coarse: RadialGrid) -> int:
    if not np.isclose(fine.spacing, coarse.spacing, rtol=1e-12, atol=0) or coarse.n_r > fine.n_r:
        raise ShapeMismatchError(f"Coarse radial grid {coarse} is not a leading section of {fine}")

    return coarse.n_r


def _restrict(u: AxisymmetricField, grid: RadialGrid, n_r: int) -> AxisymmetricField:
    return AxisymmetricField(u.channels[:1, :n_r], grid)


def _relative_norm(difference: ComplexArray, reference: ComplexArray, momentum_grid: MomentumGrid) -> float:
    scale = SpectralField(reference, momentum_grid).norm()
    error = SpectralField(difference, momentum_grid).norm()

    if scale == 0:
        return error

    return error / scale
