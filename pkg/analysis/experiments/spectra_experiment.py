from dataclasses import replace
from typing import List

import numpy as np
from pandas import DataFrame

from analysis.check_record import CheckRecord, at_least, at_most, holds, reported
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from component_factory import ComponentFactory
from config.experiment_config import ExperimentConfig
from consts.path_consts import PHASE_SHIFTS_FILE_NAME
from consts.scattering_consts import RESONANCE_THRESHOLD, WELL_ORACLE_DEPTH, WELL_ORACLE_WIDTH, \
    WELL_PHASE_TOLERANCE, BORN_ORACLE_AMPLITUDE, BORN_RELATIVE_TOLERANCE, BORN_SIGNIFICANCE_FLOOR, \
    BORN_PHASE_SHIFT, RADIATION_TEST_MOMENTUM, RADIATION_RADII_OFFSETS
from grids.momentum_grid import MomentumGrid
from grids.radial_grid import RadialGrid
from models.experiment_tag import ExperimentTag
from models.potential_form import PotentialForm
from scattering.completeness import completeness_defect
from scattering.oracles import born_phase_shift, spherical_well_phase_shift
from scattering.potential import Potential
from scattering.radiation_defect import radiation_defect
from scattering.scattering_table import ScatteringTable
from scattering.spectrum_checker import SpectralReport, check_spectrum
from tools.logging import logger
from utils.numeric_utils import log_log_slope, wrap_to_half_branch


class SpectraExperiment(IExperiment):
    """Spectral assumptions, phase-shift oracles, completeness and the radiation condition of the configured V."""

    def __init__(self, config: ExperimentConfig):
        self._config = config

    def run(self) -> ExperimentOutcome:
        potential = self._config.potential.to_potential()
        radial_grid, momentum_grid = self._config.grid.to_grids()
        l_max = self._config.grid.l_max

        logger.info(f"Starting to check the spectral assumptions of {potential}")
        checks = self._spectrum_checks(check_spectrum(potential, radial_grid, l_max))
        table = ComponentFactory.get_scattering_table(potential, radial_grid, momentum_grid, l_max, self._config.unsafe)
        checks.append(at_most('completeness_defect', completeness_defect(table), self._config.tolerances.plancherel))
        checks.append(self._well_oracle(radial_grid, momentum_grid))
        checks.append(self._born_oracle(potential, radial_grid, momentum_grid, l_max))
        checks.extend(self._radiation_checks(table))

        return ExperimentOutcome(checks=checks, artifacts={PHASE_SHIFTS_FILE_NAME: self._phase_shifts_frame(table)})

    @property
    def tag(self) -> ExperimentTag:
        return ExperimentTag.SPECTRA

    @staticmethod
    def _spectrum_checks(report: SpectralReport) -> List[CheckRecord]:
        return [
            holds('no_bound_states', report.h2_ok, hard=False, note=f'per channel: {report.bound_state_count_per_l}'),
            at_least('zero_energy_resonance_score', report.resonance_score, RESONANCE_THRESHOLD, hard=False),
            holds('hardy_condition', report.hardy_ok, hard=False),
            reported('decay_constant', report.decay_constant)
        ]

    @staticmethod
    def _well_oracle(radial_grid: RadialGrid, momentum_grid: MomentumGrid) -> CheckRecord:
        well = Potential(form=PotentialForm.SPHERICAL_WELL, amplitude=-WELL_ORACLE_DEPTH, width=WELL_ORACLE_WIDTH)
        table = ComponentFactory.get_scattering_table(well, radial_grid, momentum_grid, 0)
        exact = spherical_well_phase_shift(WELL_ORACLE_DEPTH, WELL_ORACLE_WIDTH, momentum_grid.nodes)
        deviation = np.max(np.abs(wrap_to_half_branch(table.phase_shifts[0] - exact)))

        return at_most('spherical_well_phase_shift', float(deviation), WELL_PHASE_TOLERANCE)

    @staticmethod
    def _born_oracle(potential: Potential,
                     radial_grid: RadialGrid,
                     momentum_grid: MomentumGrid,
                     l_max: int) -> CheckRecord:
        """Relative sup deviation from the Born shifts, for the configured shape at a weak amplitude."""
        weak = replace(potential, amplitude=BORN_ORACLE_AMPLITUDE)
        table = ComponentFactory.get_scattering_table(weak, radial_grid, momentum_grid, l_max)
        errors = []

        for l in range(l_max + 1):
            born = born_phase_shift(weak, momentum_grid.nodes, l, radial_grid)
            scale = np.max(np.abs(born))

            if scale > BORN_SIGNIFICANCE_FLOOR:
                errors.append(np.max(np.abs(wrap_to_half_branch(table.phase_shifts[l] - born))) / scale)

        return at_most('born_relative_error', float(max(errors, default=0.0)), BORN_RELATIVE_TOLERANCE)

    @staticmethod
    def _radiation_checks(table: ScatteringTable) -> List[CheckRecord]:
        radii = [table.potential.support_radius + offset for offset in RADIATION_RADII_OFFSETS]
        values = radiation_defect(table, RADIATION_TEST_MOMENTUM, radii)

        if np.min(values) <= 0:
            return [reported('radiation_defect', float(np.max(values)))]

        slope, _ = log_log_slope(radii, values)
        return [reported('radiation_defect', float(values[-1])), reported('radiation_decay_slope', slope)]

    @staticmethod
    def _phase_shifts_frame(table: ScatteringTable) -> DataFrame:
        frame = table.to_frame()
        born = [born_phase_shift(table.potential, table.momentum_grid.nodes, l, table.radial_grid)
                for l in range(table.l_max + 1)]
        frame[BORN_PHASE_SHIFT] = np.concatenate(born)

        return frame
