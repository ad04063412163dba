import numpy as np
import pytest

from analysis.experiments.m_kernel_experiment import MKernelExperiment
from config.config_loader import parse_config
from consts.pseudoproduct_consts import FIRST_MOMENTUM, KERNEL_REAL, KERNEL_IMAGINARY, M_KERNEL_NORMALIZATION_POWER, \
    SYMMETRY_TOLERANCE, TRIANGLE_ORACLE_TOLERANCE
from exceptions import BudgetExceededError, RangeError
from grids.axisymmetric_field import AxisymmetricField
from grids.field_algebra import inner_product, multiply_fields
from grids.grid_factory import make_grids
from models.check_status import CheckStatus
from pseudoproduct.m_kernel import MKernelBuilder, m_kernel_lambda, triangle_kernel, triangle_oracle_defect
from scattering.scattering_table_builder import build_free_table
from transform.field_families import gaussian_profile


@pytest.fixture(scope='module')
def free_kernel(free_table):
    return MKernelBuilder().build(free_table)


def test_kernel_is_symmetric_in_its_momenta(free_kernel):
    assert free_kernel.symmetry_defect() <= SYMMETRY_TOLERANCE


def test_kernel_contraction_reproduces_the_triple_integral(free_kernel, free_table, radial_grid):
    f, g, h = (AxisymmetricField.from_radial(radial_grid, gaussian_profile(width)) for width in (1.0, 1.3, 0.8))
    expected = inner_product(multiply_fields(f, g), h.conj())

    assert m_kernel_lambda(f, g, h, free_kernel, free_table) == pytest.approx(expected, rel=1e-4)


def test_kernel_respects_the_memory_budget(free_table):
    with pytest.raises(BudgetExceededError, match='n_k'):
        MKernelBuilder(memory_budget=1024).build(free_table)


def test_slice_frame_lists_the_whole_momentum_square(free_kernel, momentum_grid):
    frame = free_kernel.slice_frame(2.0)

    assert len(frame) == momentum_grid.n_k ** 2
    assert {FIRST_MOMENTUM, KERNEL_REAL, KERNEL_IMAGINARY} <= set(frame.columns)

    with pytest.raises(RangeError):
        free_kernel.slice_frame(100.0)


def test_triangle_kernel_vanishes_outside_the_triangle():
    scale = (2 / np.pi) ** M_KERNEL_NORMALIZATION_POWER * np.pi / 4
    values = triangle_kernel(np.array([1.0, 1.0, 1.0]), np.array([1.0, 1.0, 1.0]), np.array([1.0, 2.0, 3.0]))

    assert values[0] == pytest.approx(scale)
    assert values[1] == pytest.approx(scale / 4)
    assert values[2] == 0


def test_free_kernel_matches_the_triangle_oracle_on_a_long_grid():
    table = build_free_table(*make_grids(40.0, 1000, 4.0, 64), 0)
    kernel = MKernelBuilder().build(table)

    assert triangle_oracle_defect(kernel) <= TRIANGLE_ORACLE_TOLERANCE


def test_short_grid_leaves_the_triangle_oracle_above_tolerance(free_kernel):
    assert triangle_oracle_defect(free_kernel) > TRIANGLE_ORACLE_TOLERANCE


def test_experiment_reports_the_triangle_oracle_as_inconclusive_on_a_short_grid(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    config = parse_config({'tag': 'mkernel', 'grid': {'r_max': 20.0, 'n_r': 400, 'k_max': 8.0, 'n_k': 64}})
    checks = {check.name: check for check in MKernelExperiment(config).run().checks}

    assert checks['triangle_oracle_defect'].status == CheckStatus.INCONCLUSIVE
    assert not checks['triangle_oracle_defect'].hard
    assert checks['m_kernel_symmetry_defect'].status == CheckStatus.PASS
