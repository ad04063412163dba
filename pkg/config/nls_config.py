from dataclasses import dataclass

from consts.nls_consts import DEFAULT_AMPLITUDE, DEFAULT_TIME_STEP, DEFAULT_FINAL_TIME, DEFAULT_SNAPSHOT_STRIDE, \
    DEFAULT_NLS_R_MAX, DEFAULT_NLS_N_R, DEFAULT_NLS_K_MAX, DEFAULT_NLS_N_K, DEFAULT_NLS_L_MAX, DEFAULT_COARSE_N_K, \
    DEFAULT_COARSE_K_MAX, DEFAULT_COARSE_R_MAX, DEFAULT_SPECTRAL_MATCH_TIME
from grids.grid_factory import make_grids


@dataclass
class NLSConfig:
    amplitude: float = DEFAULT_AMPLITUDE
    dt: float = DEFAULT_TIME_STEP
    final_time: float = DEFAULT_FINAL_TIME
    snapshot_stride: float = DEFAULT_SNAPSHOT_STRIDE
    r_max: float = DEFAULT_NLS_R_MAX
    n_r: int = DEFAULT_NLS_N_R
    k_max: float = DEFAULT_NLS_K_MAX
    n_k: int = DEFAULT_NLS_N_K
    l_max: int = DEFAULT_NLS_L_MAX
    coarse_n_k: int = DEFAULT_COARSE_N_K
    coarse_k_max: float = DEFAULT_COARSE_K_MAX
    coarse_r_max: float = DEFAULT_COARSE_R_MAX
    match_time: float = DEFAULT_SPECTRAL_MATCH_TIME

    def to_grids(self):
        return make_grids(self.r_max, self.n_r, self.k_max, self.n_k)
