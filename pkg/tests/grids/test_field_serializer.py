import pytest
from numpy.testing import assert_allclose

from consts.grid_consts import CHANNEL, IMAG, MOMENTUM, REAL
from grids.field_serializer import field_to_frame, read_field_csv, spectral_field_to_frame, write_field_csv
from transform.distorted_fourier_transform import flat_forward


def test_field_survives_a_csv_round_trip(mixed_field, tmp_path):
    path = str(tmp_path / 'fields' / 'mixed.csv')
    write_field_csv(mixed_field, path)
    restored = read_field_csv(path)

    assert restored.grid == mixed_field.grid
    assert restored.l_max == mixed_field.l_max
    assert_allclose(restored.channels, mixed_field.channels, rtol=1e-14)


def test_field_frame_has_one_row_per_sample(mixed_field):
    frame = field_to_frame(mixed_field)

    assert len(frame) == (mixed_field.l_max + 1) * mixed_field.grid.n_r
    assert frame[REAL].iloc[0] == pytest.approx(mixed_field.channels[0, 0].real)
    assert frame[IMAG].iloc[0] == pytest.approx(mixed_field.channels[0, 0].imag)


def test_spectral_frame_lists_momenta(gaussian_field, momentum_grid):
    frame = spectral_field_to_frame(flat_forward(gaussian_field, momentum_grid))

    assert set(frame[CHANNEL]) == {0}
    assert_allclose(frame[MOMENTUM].to_numpy(), momentum_grid.nodes)
