import numpy as np
import pytest
from numpy.testing import assert_allclose

from exceptions import RangeError
from models.littlewood_paley_mode import LittlewoodPaleyMode
from transform.bumps import band_pass_bump, low_pass_bump, smooth_plateau
from transform.dyadic_ladder import DyadicLadder


def test_scales_are_symmetric_powers_of_two():
    ladder = DyadicLadder(depth=2)
    assert ladder.scales == [0.25, 0.5, 1.0, 2.0, 4.0]


def test_partition_of_unity_on_the_momentum_grid(momentum_grid):
    assert DyadicLadder().partition_defect(momentum_grid.nodes) <= 1e-12


def test_partition_fails_above_the_top_scale():
    ladder = DyadicLadder(depth=1)
    assert ladder.partition_defect(np.array([20.0])) == pytest.approx(1.0)


def test_bumps_have_the_documented_supports():
    k = np.linspace(0, 6, 601)

    assert_allclose(low_pass_bump(k[k <= 1]), 1.0)
    assert_allclose(low_pass_bump(k[k >= 2]), 0.0)
    assert_allclose(band_pass_bump(k[(k <= 1) | (k >= 4)]), 0.0)
    assert np.all(band_pass_bump(k) >= 0)


def test_low_mode_uses_the_low_pass_bump():
    ladder = DyadicLadder(depth=1)
    k = np.array([0.1, 1.5, 3.0])

    assert_allclose(ladder.symbol(k, 1.0, LittlewoodPaleyMode.LOW), low_pass_bump(k))
    assert_allclose(ladder.symbol(k, 1.0), band_pass_bump(k))


def test_scales_outside_the_ladder_are_rejected():
    with pytest.raises(RangeError):
        DyadicLadder(depth=1).symbol(np.array([1.0]), 3.0)


def test_smooth_plateau_is_one_inside_and_zero_outside():
    x = np.array([-3.0, -0.5, 0.0, 0.9, 1.5, 2.5])
    assert_allclose(smooth_plateau(x, 1.0, 2.0)[[1, 2, 3]], 1.0)
    assert_allclose(smooth_plateau(x, 1.0, 2.0)[[0, 5]], 0.0)
    assert 0 < smooth_plateau(x, 1.0, 2.0)[4] < 1
