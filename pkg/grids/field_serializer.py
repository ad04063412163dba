import numpy as np
import pandas as pd
from pandas import DataFrame

from consts.grid_consts import CHANNEL, NODE, REAL, IMAG, L_MAX_HEADER, N_R_HEADER, R_MAX_HEADER, MOMENTUM
from consts.miscellaneous_consts import UTF_8_ENCODING
from grids.axisymmetric_field import AxisymmetricField
from grids.radial_grid import RadialGrid
from grids.spectral_field import SpectralField
from utils.file_utils import to_csv


def field_to_frame(field: AxisymmetricField) -> DataFrame:
    channels, nodes = np.indices(field.channels.shape)
    return DataFrame({
        CHANNEL: channels.ravel(),
        NODE: nodes.ravel(),
        REAL: field.channels.real.ravel(),
        IMAG: field.channels.imag.ravel()
    })


def spectral_field_to_frame(field: SpectralField) -> DataFrame:
    channels, nodes = np.indices(field.channels.shape)
    return DataFrame({
        CHANNEL: channels.ravel(),
        MOMENTUM: field.grid.nodes[nodes.ravel()],
        REAL: field.channels.real.ravel(),
        IMAG: field.channels.imag.ravel()
    })


def write_field_csv(field: AxisymmetricField, path: str) -> None:
    """A one-row header frame (L, n_r, r_max) followed by the (l, i, re, im) rows."""
    header = DataFrame([{L_MAX_HEADER: field.l_max, N_R_HEADER: field.grid.n_r, R_MAX_HEADER: field.grid.r_max}])
    to_csv(header, path)
    to_csv(field_to_frame(field), path, mode='a')


def read_field_csv(path: str) -> AxisymmetricField:
    header = pd.read_csv(path, nrows=1, encoding=UTF_8_ENCODING)
    rows = pd.read_csv(path, skiprows=2, encoding=UTF_8_ENCODING)
    l_max = int(header[L_MAX_HEADER].iloc[0])
    grid = RadialGrid(r_max=float(header[R_MAX_HEADER].iloc[0]), n_r=int(header[N_R_HEADER].iloc[0]))
    channels = np.zeros((l_max + 1, grid.n_r), dtype=np.complex128)
    channels[rows[CHANNEL].to_numpy(), rows[NODE].to_numpy()] = rows[REAL].to_numpy() + 1j * rows[IMAG].to_numpy()

    return AxisymmetricField(channels, grid)
