from analysis.check_record import CheckRecord, at_most, inconclusive
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from component_factory import ComponentFactory
from config.experiment_config import ExperimentConfig
from consts.path_consts import M_KERNEL_SLICE_FILE_NAME
from consts.pseudoproduct_consts import TRIANGLE_ORACLE_MIN_R_MAX, WEAK_FORM_WIDTHS
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import inner_product, multiply_fields
from models.experiment_tag import ExperimentTag
from pseudoproduct.m_kernel import m_kernel_lambda, triangle_oracle_defect
from scattering.potential import Potential
from tools.logging import logger
from transform.field_families import gaussian_profile
from utils.numeric_utils import relative_difference


class MKernelExperiment(IExperiment):
    """Triangle oracle of the free kernel, permutation symmetry and the weak form ∫fgh dx of the configured one."""

    def __init__(self, config: ExperimentConfig):
        self._config = config

    def run(self) -> ExperimentOutcome:
        config = self._config
        potential = config.potential.to_potential()
        radial_grid, momentum_grid = config.grid.to_grids()
        tolerances = config.tolerances

        free_kernel = ComponentFactory.get_m_kernel(Potential.free(), radial_grid, momentum_grid)
        checks = [self._triangle_check(triangle_oracle_defect(free_kernel), radial_grid.r_max)]

        kernel = ComponentFactory.get_m_kernel(potential, radial_grid, momentum_grid, config.unsafe)
        table = ComponentFactory.get_scattering_table(potential, radial_grid, momentum_grid, 0, config.unsafe)
        checks.append(at_most('m_kernel_symmetry_defect', kernel.symmetry_defect(), tolerances.symmetry))

        logger.info("Starting to cross-check the M kernel against ∫fgh dx")
        f, g, h = [AxisymmetricField.from_radial(radial_grid, gaussian_profile(width)) for width in WEAK_FORM_WIDTHS]
        direct = inner_product(multiply_fields(f, g, l_max=0), h.conj())
        through_kernel = m_kernel_lambda(f, g, h, kernel, table)
        checks.append(at_most('m_kernel_weak_form_defect', relative_difference(through_kernel, direct), tolerances.weak_form))

        slice_momentum = float(momentum_grid.nodes[momentum_grid.n_k // 2])
        return ExperimentOutcome(checks=checks, artifacts={M_KERNEL_SLICE_FILE_NAME: kernel.slice_frame(slice_momentum)})

    @property
    def tag(self) -> ExperimentTag:
        return ExperimentTag.MKERNEL

    def _triangle_check(self, defect: float, r_max: float) -> CheckRecord:
        threshold = self._config.tolerances.triangle_oracle

        if r_max < TRIANGLE_ORACLE_MIN_R_MAX:
            logger.warning(f"r_max={r_max:g} is too short for the triangle oracle; reporting it as inconclusive")
            return inconclusive('triangle_oracle_defect', defect, threshold,
                                f'r_max below {TRIANGLE_ORACLE_MIN_R_MAX:g}')

        return at_most('triangle_oracle_defect', defect, threshold)
