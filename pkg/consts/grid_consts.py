# Defaults
DEFAULT_R_MAX = 40.0
DEFAULT_N_R = 2000
DEFAULT_K_MAX = 8.0
DEFAULT_N_K = 256
DEFAULT_L_MAX = 2

# Validation
MIN_GRID_NODES = 8
WEIGHT_SUM_TOLERANCE = 1e-12
TAIL_REGION_FRACTION = 0.9
TAIL_MASS_WARNING = 1e-8

# Angular quadrature
EXTRA_ANGULAR_NODES = 4

# Serialization columns
CHANNEL = 'l'
NODE = 'i'
MOMENTUM = 'k'
REAL = 're'
IMAG = 'im'
L_MAX_HEADER = 'L'
N_R_HEADER = 'n_r'
R_MAX_HEADER = 'r_max'
TRUNCATION_WARNING = 1e-8
