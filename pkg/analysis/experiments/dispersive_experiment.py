from typing import Callable, List

import numpy as np
import pandas as pd

from analysis.check_record import CheckRecord, at_most, reported
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from component_factory import ComponentFactory
from config.experiment_config import ExperimentConfig
from consts.estimates_consts import RANDOM_FAMILY_SIZE, DISPERSIVE_SAMPLE_COUNT, DISPERSIVE_SPREAD_LIMIT, \
    INTERTWINING_FINAL_TIME, INTERTWINING_SAMPLE_COUNT, COMMUTATOR_SPREAD_LIMIT, FREE_COMMUTATOR_TOLERANCE, \
    DIRECTIONAL_CONTRAST_MIN_L
from consts.path_consts import DISPERSIVE_FILE_NAME, HARNESS_FILE_NAME
from consts.report_consts import FAMILY, PARAMETER, RATIO, TIME_COLUMN
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm
from models.experiment_tag import ExperimentTag
from tools.logging import logger
from transform.field_families import FamilyMember, dilation_family, gaussian_profile, random_field_family
from utils.numeric_utils import spread_ratio
from waveop.directional_contrast import directional_contrast
from waveop.dispersive import dispersive_series
from waveop.harness_report import HarnessReport, norm_ratio_harness
from waveop.wave_operator import commutator_radial, propagator, wave_operator, wave_operator_adjoint
from waveop.wave_operator_tables import WaveOperatorTables

FieldOperator = Callable[[AxisymmetricField], AxisymmetricField]


class DispersiveExperiment(IExperiment):
    """Unitarity and intertwining of Ω, the dispersive ratio over t ∈ [1, T] and the commutator harnesses."""

    def __init__(self, config: ExperimentConfig):
        self._config = config

    def run(self) -> ExperimentOutcome:
        config = self._config
        radial_grid, momentum_grid = config.grid.to_grids()
        tables = ComponentFactory.get_wave_operator_tables(
            config.potential.to_potential(), radial_grid, momentum_grid, config.grid.l_max, config.unsafe
        )
        family = random_field_family(radial_grid, RANDOM_FAMILY_SIZE, config.seed, config.grid.l_max)

        logger.info("Starting to check unitarity and intertwining of the wave operator")
        checks = [
            at_most('unitarity_defect_adjoint_first', self._defect(family, lambda f: wave_operator_adjoint(
                wave_operator(f, tables), tables), lambda f: f), config.tolerances.unitarity),
            at_most('unitarity_defect_adjoint_last', self._defect(family, lambda f: wave_operator(
                wave_operator_adjoint(f, tables), tables), lambda f: f), config.tolerances.unitarity),
            at_most('intertwining_defect', self._intertwining_defect(family, tables), config.tolerances.intertwining),
            at_most('intertwining_defect_adjoint', self._adjoint_intertwining_defect(family, tables),
                    config.tolerances.intertwining)
        ]

        times, ratios = self._dispersive_ratios(tables)
        checks.append(at_most('dispersive_ratio_spread', spread_ratio(ratios), DISPERSIVE_SPREAD_LIMIT))

        members = dilation_family(gaussian_profile(), radial_grid, momentum_grid)
        harnesses = self._commutator_harnesses(members, tables)
        checks.extend(self._commutator_checks(harnesses, tables.is_free))

        if tables.l_max >= DIRECTIONAL_CONTRAST_MIN_L:
            contrast = directional_contrast(members, tables, config.estimates.commutator_p, config.estimates.commutator_q)
            checks.append(reported('directional_contrast_radial_spread', spread_ratio(contrast.radial_ratios)))
            checks.append(reported('directional_contrast_height_spread', spread_ratio(contrast.directional_ratios)))

        artifacts = {
            DISPERSIVE_FILE_NAME: pd.DataFrame({TIME_COLUMN: times, RATIO: ratios}),
            HARNESS_FILE_NAME: self._harness_frame(harnesses)
        }
        return ExperimentOutcome(checks=checks, artifacts=artifacts)

    @property
    def tag(self) -> ExperimentTag:
        return ExperimentTag.DISPERSIVE

    @staticmethod
    def _defect(family: List[AxisymmetricField], first: FieldOperator, second: FieldOperator) -> float:
        return max(l2_norm(first(f) - second(f)) / l2_norm(f) for f in family)

    def _intertwining_defect(self, family: List[AxisymmetricField], tables: WaveOperatorTables) -> float:
        """sup_t ‖e^{itH}Ωf − Ωe^{itH₀}f‖₂/‖f‖₂."""
        return max(
            self._defect(
                family,
                lambda f: propagator(wave_operator(f, tables), t, tables.distorted),
                lambda f: wave_operator(propagator(f, t, tables.flat), tables)
            )
            for t in self._intertwining_times()
        )

    def _adjoint_intertwining_defect(self, family: List[AxisymmetricField], tables: WaveOperatorTables) -> float:
        """sup_t ‖Ω*e^{itH}f − e^{itH₀}Ω*f‖₂/‖f‖₂."""
        return max(
            self._defect(
                family,
                lambda f: wave_operator_adjoint(propagator(f, t, tables.distorted), tables),
                lambda f: propagator(wave_operator_adjoint(f, tables), t, tables.flat)
            )
            for t in self._intertwining_times()
        )

    @staticmethod
    def _intertwining_times() -> List[float]:
        return np.linspace(0, INTERTWINING_FINAL_TIME, INTERTWINING_SAMPLE_COUNT).tolist()

    def _dispersive_ratios(self, tables: WaveOperatorTables):
        estimates = self._config.estimates
        datum = AxisymmetricField.from_radial(tables.radial_grid, gaussian_profile())
        times = np.geomspace(1, estimates.dispersive_final_time, DISPERSIVE_SAMPLE_COUNT).tolist()

        logger.info(f"Starting to sample the dispersive ratio at {len(times)} times")
        return times, dispersive_series(datum, times, tables, estimates.dispersive_p)

    def _commutator_harnesses(self, members: List[FamilyMember], tables: WaveOperatorTables) -> List[HarnessReport]:
        p, q = self._config.estimates.commutator_p, self._config.estimates.commutator_q
        weights = {
            'bracket_x': lambda r: np.sqrt(1 + r ** 2),
            'abs_x': lambda r: r
        }

        return [
            norm_ratio_harness(name, members, lambda f, weight=weight: commutator_radial(f, weight, tables), p, q)
            for name, weight in weights.items()
        ]

    @staticmethod
    def _commutator_checks(harnesses: List[HarnessReport], is_free: bool) -> List[CheckRecord]:
        """With V = 0 the commutators vanish identically; otherwise their ratio families stay flat."""
        if is_free:
            return [
                at_most(f'commutator_{harness.family}_free', harness.max_ratio, FREE_COMMUTATOR_TOLERANCE)
                for harness in harnesses
            ]

        return [
            at_most(f'commutator_{harness.family}_spread', harness.spread, COMMUTATOR_SPREAD_LIMIT)
            for harness in harnesses
        ]

    @staticmethod
    def _harness_frame(harnesses: List[HarnessReport]) -> pd.DataFrame:
        return pd.DataFrame.from_records(
            [
                {FAMILY: harness.family, PARAMETER: parameter, RATIO: ratio}
                for harness in harnesses
                for parameter, ratio in zip(harness.parameters, harness.ratios)
            ],
            columns=[FAMILY, PARAMETER, RATIO]
        )
