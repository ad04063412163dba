from typing import List

import numpy as np

from analysis.check_record import CheckRecord, at_most
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from component_factory import ComponentFactory
from config.experiment_config import ExperimentConfig
from consts.estimates_consts import RANDOM_FAMILY_SIZE, SQUARE_FUNCTION_CONSTANT, SQUARE_FUNCTION_EXPONENTS
from consts.path_consts import SPECTRAL_FIELD_FILE_NAME
from consts.transform_consts import PARTITION_TOLERANCE
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import l2_norm, lp_norm
from grids.field_serializer import spectral_field_to_frame
from models.experiment_tag import ExperimentTag
from scattering.hamiltonian import apply_hamiltonian
from scattering.scattering_table import ScatteringTable
from tools.logging import logger
from transform.distorted_fourier_transform import get_transform
from transform.dyadic_ladder import DyadicLadder
from transform.field_families import random_field_family
from transform.multiplier_operators import apply_multiplier, square_function_norm
from transform.multiplier_spec import MultiplierSpec


class TransformCheckExperiment(IExperiment):
    def __init__(self, config: ExperimentConfig):
        self._config = config

    def run(self) -> ExperimentOutcome:
        config = self._config
        radial_grid, momentum_grid = config.grid.to_grids()
        table = ComponentFactory.get_scattering_table(
            config.potential.to_potential(), radial_grid, momentum_grid, config.grid.l_max, config.unsafe
        )
        family = random_field_family(radial_grid, RANDOM_FAMILY_SIZE, config.seed, config.grid.l_max)
        ladder = config.ladder.to_ladder()
        tolerances = config.tolerances

        logger.info(f"Starting to check the transform on {len(family)} random fields")
        checks = [
            at_most('plancherel_defect', self._plancherel_defect(family, table), tolerances.plancherel),
            at_most('inversion_defect', self._inversion_defect(family, table), tolerances.inversion),
            at_most('diagonalization_defect', self._diagonalization_defect(family, table), tolerances.diagonalization),
            at_most('littlewood_paley_partition_defect', ladder.partition_defect(momentum_grid.nodes), PARTITION_TOLERANCE)
        ]
        checks.extend(self._square_function_checks(family, table, ladder))
        spectral = get_transform(table).forward(family[0])

        return ExperimentOutcome(checks=checks, artifacts={SPECTRAL_FIELD_FILE_NAME: spectral_field_to_frame(spectral)})

    @property
    def tag(self) -> ExperimentTag:
        return ExperimentTag.TRANSFORM_CHECK

    @staticmethod
    def _plancherel_defect(family: List[AxisymmetricField], table: ScatteringTable) -> float:
        transform = get_transform(table)
        return max(abs(transform.forward(f).norm() - l2_norm(f)) / l2_norm(f) for f in family)

    @staticmethod
    def _inversion_defect(family: List[AxisymmetricField], table: ScatteringTable) -> float:
        transform = get_transform(table)
        return max(l2_norm(transform.inverse(transform.forward(f)) - f) / l2_norm(f) for f in family)

    @staticmethod
    def _diagonalization_defect(family: List[AxisymmetricField], table: ScatteringTable) -> float:
        """‖k²(D♯)f − Hf‖₂ / ‖Hf‖₂ with Hf from the finite-difference Laplacian."""
        energy = MultiplierSpec(symbol=lambda k: np.asarray(k) ** 2)
        defects = []

        for f in family:
            direct = apply_hamiltonian(f, table.potential)
            defects.append(l2_norm(apply_multiplier(f, energy, table) - direct) / l2_norm(direct))

        return max(defects)

    @staticmethod
    def _square_function_checks(family: List[AxisymmetricField],
                                table: ScatteringTable,
                                ladder: DyadicLadder) -> List[CheckRecord]:
        """‖Sf‖_p ≈ ‖f‖_p: the worst of ratio and inverse ratio stays below a fixed constant."""
        checks = []

        for p in SQUARE_FUNCTION_EXPONENTS:
            ratios = [square_function_norm(f, 0.0, p, table, ladder) / lp_norm(f, p) for f in family]
            distortion = max(max(ratios), 1 / min(ratios))
            checks.append(at_most(f'square_function_distortion_p{p:g}', distortion, SQUARE_FUNCTION_CONSTANT, hard=False))

        return checks
