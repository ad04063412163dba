from typing import Dict, List, Tuple

import pandas as pd

from analysis.check_record import CheckRecord, at_most, reported
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from component_factory import ComponentFactory
from config.experiment_config import ExperimentConfig
from consts.estimates_consts import HOLDER_SPREAD_LIMIT, PRODUCT_IDENTITY_TOLERANCE
from consts.path_consts import HOLDER_FILE_NAME, SYMBOL_TERMS_FILE_NAME
from consts.pseudoproduct_consts import DECAY_FIT_TARGET
from consts.report_consts import PARAMETER, RATIO, SYMBOL
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm, multiply_fields
from models.experiment_tag import ExperimentTag
from models.separation_method import SeparationMethod
from pseudoproduct.cm_constant import cm_constant
from pseudoproduct.holder import HolderReport, holder_family_report
from pseudoproduct.pseudo_product import apply_T, cross_backend_bound
from pseudoproduct.separable_symbol import SeparableSymbol
from pseudoproduct.symbol_library import TEST_SYMBOLS, unit_symbol
from pseudoproduct.symbol_separation import separate_symbol
from scattering.scattering_table import ScatteringTable
from tools.logging import logger
from transform.field_families import dilation_family, gaussian_profile


class EstimatesExperiment(IExperiment):
    """
    Hölder ratios of the pseudo-products along the dilation family, the m ≡ 1 product identity, agreement of the two
    separation backends and the decay of the dyadic Fourier coefficients.
    """

    def __init__(self, config: ExperimentConfig):
        self._config = config
        self._separations: Dict[Tuple[str, SeparationMethod], SeparableSymbol] = {}

    def run(self) -> ExperimentOutcome:
        config = self._config
        radial_grid, momentum_grid = config.grid.to_grids()
        table = ComponentFactory.get_scattering_table(
            config.potential.to_potential(), radial_grid, momentum_grid, config.grid.l_max, config.unsafe
        )
        family = dilation_family(gaussian_profile(), radial_grid, momentum_grid)
        first = AxisymmetricField.from_radial(radial_grid, gaussian_profile())
        second = AxisymmetricField.from_radial(radial_grid, gaussian_profile(width=1.5))
        checks = [self._product_identity_check(first, second, table)]
        reports = []

        for name in config.estimates.symbols:
            logger.info(f"Starting to run the Hölder harness for `{name}`")
            symbol = self._separate(name, config.estimates.separation_method, table)
            report = holder_family_report(
                name, family, symbol, config.estimates.p, config.estimates.q, config.estimates.r_prime, table
            )
            reports.append(report)
            checks.append(at_most(f'holder_spread_{name}', report.spread, HOLDER_SPREAD_LIMIT))
            checks.append(reported(f'cm_constant_{name}', cm_constant(TEST_SYMBOLS[name](), momentum_grid)))
            checks.extend(self._backend_checks(name, first, second, table))

        artifacts = {HOLDER_FILE_NAME: self._holder_frame(reports), SYMBOL_TERMS_FILE_NAME: self._terms_frame()}
        return ExperimentOutcome(checks=checks, artifacts=artifacts)

    @property
    def tag(self) -> ExperimentTag:
        return ExperimentTag.ESTIMATES

    def _separate(self, name: str, method: SeparationMethod, table: ScatteringTable) -> SeparableSymbol:
        key = (name, method)

        if key not in self._separations:
            symbol = TEST_SYMBOLS[name]()
            self._separations[key] = separate_symbol(
                symbol, method, self._config.tolerances.separation, table.momentum_grid
            )

        return self._separations[key]

    def _product_identity_check(self,
                                first: AxisymmetricField,
                                second: AxisymmetricField,
                                table: ScatteringTable) -> CheckRecord:
        unit = separate_symbol(
            unit_symbol(variables=2), SeparationMethod.GLOBAL, self._config.tolerances.separation, table.momentum_grid
        )
        expected = multiply_fields(first, second, l_max=0)
        defect = l2_norm(apply_T(first, second, unit, table) - expected) / l2_norm(expected)

        return at_most('unit_symbol_product_identity', defect, PRODUCT_IDENTITY_TOLERANCE)

    def _backend_checks(self,
                        name: str,
                        first: AxisymmetricField,
                        second: AxisymmetricField,
                        table: ScatteringTable) -> List[CheckRecord]:
        """Two-variable symbols compare the backends through the bound; three-variable ones report their errors."""
        dyadic = self._separate(name, SeparationMethod.DYADIC, table)
        global_symbol = self._separate(name, SeparationMethod.GLOBAL, table)
        checks = [at_most(f'coefficient_decay_{name}', dyadic.coefficient_decay_exponent(), DECAY_FIT_TARGET)]

        if dyadic.variables != 2:
            checks.append(reported(f'reconstruction_error_dyadic_{name}', dyadic.reconstruction_error))
            checks.append(reported(f'reconstruction_error_global_{name}', global_symbol.reconstruction_error))
            return checks

        difference = l2_norm(apply_T(first, second, dyadic, table) - apply_T(first, second, global_symbol, table))
        bound = cross_backend_bound(first, second, dyadic, global_symbol, table)
        checks.append(at_most(f'cross_backend_{name}', difference, bound))

        return checks

    @staticmethod
    def _holder_frame(reports: List[HolderReport]) -> pd.DataFrame:
        return pd.DataFrame.from_records(
            [
                {SYMBOL: report.symbol, PARAMETER: parameter, RATIO: ratio}
                for report in reports
                for parameter, ratio in zip(report.parameters, report.ratios)
            ],
            columns=[SYMBOL, PARAMETER, RATIO]
        )

    def _terms_frame(self) -> pd.DataFrame:
        frames = []

        for (name, method), symbol in sorted(self._separations.items(), key=lambda item: (item[0][0], item[0][1].value)):
            if method == SeparationMethod.DYADIC:
                frames.append(symbol.to_frame().assign(**{SYMBOL: name}))

        return pd.concat(frames, ignore_index=True) if frames else pd.DataFrame()
