from typing import List

from analysis.check_record import CheckRecord, at_most, holds, inconclusive, reported, within
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from component_factory import ComponentFactory
from config.experiment_config import ExperimentConfig
from consts.nls_consts import ORDER_RANGE, DECAY_EXPONENTS, DECAY_SLOPE_TOLERANCES, FINAL_INCREMENT_FRACTION, \
    X_NORM_GROWTH_LIMIT, INITIAL_DATUM_WIDTH
from consts.path_consts import TRAJECTORY_FILE_NAME
from exceptions import BlowupError, BoundaryContaminationError
from grids.axisymmetric_field import AxisymmetricField
from models.check_status import CheckStatus
from models.experiment_tag import ExperimentTag
from nls.decay_fit import decay_fit
from nls.duhamel import coarse_grids, duhamel_residual_physical, duhamel_residual_spectral
from nls.evolution import evolve
from nls.profile import spectral_x_norm, x_norm
from nls.resonance import resonance_sets
from nls.scattering_defect import relative_final_increment, scattering_defect
from nls.strang_stepper import self_convergence_order
from nls.trajectory import Trajectory
from tools.logging import logger
from transform.field_families import gaussian_profile
from waveop.wave_operator_tables import WaveOperatorTables


class NLSExperiment(IExperiment):
    """
    Small Gaussian datum evolved under i∂ₜu − Δu + Vu = ū²: splitting order, both Duhamel cross-checks, decay
    slopes, profile convergence and the X-norm bound.
    """

    def __init__(self, config: ExperimentConfig):
        self._config = config

    def run(self) -> ExperimentOutcome:
        nls = self._config.nls
        radial_grid, momentum_grid = nls.to_grids()
        tables = ComponentFactory.get_wave_operator_tables(
            self._config.potential.to_potential(), radial_grid, momentum_grid, nls.l_max, self._config.unsafe
        )
        datum = AxisymmetricField.from_radial(
            radial_grid, lambda r: nls.amplitude * gaussian_profile(INITIAL_DATUM_WIDTH)(r), l_max=nls.l_max
        )
        checks = self._static_checks(datum, tables)

        logger.info("Starting to measure the splitting order")
        convergence = self_convergence_order(datum, nls.dt, tables.distorted)
        low, high = ORDER_RANGE
        checks.append(within('strang_order', convergence.order, (low + high) / 2, (high - low) / 2))

        try:
            trajectory = evolve(datum, nls.final_time, nls.dt, tables, nls.snapshot_stride)
        except (BlowupError, BoundaryContaminationError) as e:
            logger.warning(f"Evolution aborted: {e}")
            checks.append(CheckRecord('trajectory_valid', e.time, None, CheckStatus.FAIL, True, str(e)))
            return ExperimentOutcome(checks=checks, partial=True, error=str(e))

        checks.append(holds('trajectory_valid', trajectory.valid))
        checks.extend(self._duhamel_checks(trajectory, tables))
        checks.extend(self._decay_checks(trajectory))
        checks.extend(self._scattering_checks(trajectory, tables))

        return ExperimentOutcome(checks=checks, artifacts={TRAJECTORY_FILE_NAME: trajectory.to_frame()})

    @property
    def tag(self) -> ExperimentTag:
        return ExperimentTag.NLS

    @staticmethod
    def _static_checks(datum: AxisymmetricField, tables: WaveOperatorTables) -> List[CheckRecord]:
        resonances = resonance_sets(tables.momentum_grid)
        checks = [
            holds('time_resonant_set_empty', resonances.time_resonant_points == 0, hard=False),
            holds('space_resonant_set_empty', resonances.space_resonant_points == 0, hard=False),
            reported('min_resonance_phase', resonances.min_phase)
        ]
        physical = x_norm(datum, 0.0, tables).total

        if physical > 0:
            checks.append(reported('x_norm_equivalence_ratio', spectral_x_norm(datum, 0.0, tables.distorted) / physical))

        return checks

    def _duhamel_checks(self, trajectory: Trajectory, tables: WaveOperatorTables) -> List[CheckRecord]:
        config = self._config
        nls = config.nls
        tolerances = config.tolerances
        physical = duhamel_residual_physical(trajectory, tables.distorted)
        trajectory.record_duhamel_residuals(physical.residuals)

        if physical.inconclusive:
            checks = [inconclusive('duhamel_residual_physical', physical.residual, tolerances.duhamel,
                                   f'quadrature self-estimate {physical.quadrature_estimate:.2e}')]
        else:
            checks = [at_most('duhamel_residual_physical', physical.residual, tolerances.duhamel)]

        coarse_radial, coarse_momentum = coarse_grids(
            tables.radial_grid, nls.coarse_r_max, nls.coarse_k_max, nls.coarse_n_k
        )
        potential = tables.distorted.potential
        coarse_table = ComponentFactory.get_scattering_table(potential, coarse_radial, coarse_momentum, 0, config.unsafe)
        kernel = ComponentFactory.get_m_kernel(potential, coarse_radial, coarse_momentum, config.unsafe)
        spectral = duhamel_residual_spectral(trajectory, kernel, coarse_table, nls.match_time)
        checks.append(at_most('duhamel_spectral_discrepancy', spectral.discrepancy, tolerances.spectral_duhamel))

        return checks

    @staticmethod
    def _decay_checks(trajectory: Trajectory) -> List[CheckRecord]:
        checks = []

        for p in DECAY_EXPONENTS:
            fit = decay_fit(trajectory, p)
            name = f'decay_slope_p{p:g}'

            if fit.low_confidence:
                checks.append(inconclusive(name, fit.slope, DECAY_SLOPE_TOLERANCES[p],
                                           f'window spans {fit.decades:.2f} decades'))
            else:
                checks.append(within(name, fit.slope, fit.target, DECAY_SLOPE_TOLERANCES[p]))

        return checks

    @staticmethod
    def _scattering_checks(trajectory: Trajectory, tables: WaveOperatorTables) -> List[CheckRecord]:
        report = scattering_defect(trajectory, tables)
        initial_x = trajectory.diagnostics[0].x_total
        growth = max(d.x_total for d in trajectory.diagnostics) / initial_x if initial_x > 0 else 0.0
        checks = [
            holds('profile_increments_monotone', report.monotone),
            at_most('final_profile_increment', relative_final_increment(report, trajectory), FINAL_INCREMENT_FRACTION),
            at_most('x_norm_growth', growth, X_NORM_GROWTH_LIMIT),
            reported('profile_tail_defect', report.profile_defect),
            reported('profile_drift', report.drift)
        ]

        if report.flat_profile_defect is not None:
            checks.append(reported('flat_profile_tail_defect', report.flat_profile_defect))

        return checks
