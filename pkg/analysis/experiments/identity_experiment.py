import pandas as pd

from analysis.check_record import CheckRecord, at_least, at_most, inconclusive, reported
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from component_factory import ComponentFactory
from config.experiment_config import ExperimentConfig
from consts.estimates_consts import IDENTITY_WIDTHS, IDENTITY_REFINEMENT_FACTOR, IDENTITY_FLOOR, \
    IDENTITY_DEFECT_DROP
from consts.path_consts import IDENTITY_FILE_NAME
from consts.report_consts import GRID_NODES, LHS_REAL, LHS_IMAG, RHS_REAL, RHS_IMAG, DEFECT
from exceptions import ConfigurationError
from grids.axisymmetric_field import AxisymmetricField
from grids.grid_factory import make_grids
from models.experiment_tag import ExperimentTag
from pseudoproduct.derivative_identity import DerivativeIdentityReport, derivative_identity
from tools.logging import logger
from transform.field_families import gaussian_profile


class IdentityExperiment(IExperiment):
    """The derivative identity for |x| moved across Ω, at the configured radial grid and at twice its nodes."""

    def __init__(self, config: ExperimentConfig):
        if config.grid.l_max < 1:
            raise ConfigurationError("The identity experiment needs grid.l_max ≥ 1")

        self._config = config

    def run(self) -> ExperimentOutcome:
        grid = self._config.grid
        node_counts = [grid.n_r, int(IDENTITY_REFINEMENT_FACTOR * grid.n_r)]
        reports = [self._evaluate(n_r) for n_r in node_counts]
        coarse, fine = reports

        checks = [
            self._defect_check(coarse),
            self._refinement_check(coarse, fine),
            reported('derivative_identity_defect_refined', fine.defect)
        ]
        frame = pd.DataFrame({
            GRID_NODES: node_counts,
            LHS_REAL: [report.lhs.real for report in reports],
            LHS_IMAG: [report.lhs.imag for report in reports],
            RHS_REAL: [report.rhs.real for report in reports],
            RHS_IMAG: [report.rhs.imag for report in reports],
            DEFECT: [report.defect for report in reports]
        })

        return ExperimentOutcome(checks=checks, artifacts={IDENTITY_FILE_NAME: frame})

    @property
    def tag(self) -> ExperimentTag:
        return ExperimentTag.IDENTITY

    def _evaluate(self, n_r: int) -> DerivativeIdentityReport:
        config = self._config
        radial_grid, momentum_grid = make_grids(config.grid.r_max, n_r, config.grid.k_max, config.grid.n_k)
        tables = ComponentFactory.get_wave_operator_tables(
            config.potential.to_potential(), radial_grid, momentum_grid, config.grid.l_max, config.unsafe
        )
        f, g, h = [AxisymmetricField.from_radial(radial_grid, gaussian_profile(width)) for width in IDENTITY_WIDTHS]

        logger.info(f"Starting to evaluate the derivative identity on {n_r} radial nodes")
        return derivative_identity(f, g, h, tables)

    def _defect_check(self, report: DerivativeIdentityReport) -> CheckRecord:
        threshold = self._config.tolerances.identity

        if report.inconclusive:
            return inconclusive('derivative_identity_defect', report.defect, threshold,
                                f'𝓡³h dropped {report.dropped_mass:.2%} of its mass')

        return at_most('derivative_identity_defect', report.defect, threshold)

    @staticmethod
    def _refinement_check(coarse: DerivativeIdentityReport, fine: DerivativeIdentityReport) -> CheckRecord:
        """The defect drops at least twofold under radial refinement, unless it already sits at the rounding floor."""
        if fine.defect <= IDENTITY_FLOOR:
            return at_most('derivative_identity_refinement', fine.defect, IDENTITY_FLOOR,
                           note='defect at the rounding floor')

        return at_least('derivative_identity_refinement', coarse.defect / fine.defect, IDENTITY_DEFECT_DROP)
