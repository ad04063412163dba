# Defaults of the small-data run
DEFAULT_AMPLITUDE = 0.05
DEFAULT_TIME_STEP = 0.005
DEFAULT_FINAL_TIME = 20.0
DEFAULT_SNAPSHOT_STRIDE = 0.1
DEFAULT_NLS_R_MAX = 200.0
DEFAULT_NLS_N_R = 4000
DEFAULT_NLS_K_MAX = 8.0
DEFAULT_NLS_N_K = 640
DEFAULT_NLS_L_MAX = 0
DEFAULT_COARSE_N_K = 32
DEFAULT_COARSE_K_MAX = 4.0
DEFAULT_COARSE_R_MAX = 20.0
DEFAULT_SPECTRAL_MATCH_TIME = 1.0

# Monitors
BOUNDARY_MASS_LIMIT = 1e-6
X_NORM_ABORT_FACTOR = 4.0
X_NORM_GROWTH_LIMIT = 2.0
QUADRATURE_TOLERANCE = 1e-4
RICHARDSON_SIMPSON_FACTOR = 15.0
STRIDE_MATCH_TOLERANCE = 1e-9
LINEAR_RESIDUAL_TOLERANCE = 1e-8
PHYSICAL_RESIDUAL_TOLERANCE = 1e-4
SPECTRAL_DISCREPANCY_TOLERANCE = 1e-2
FINAL_INCREMENT_FRACTION = 1e-3

# Decay fits
DECAY_WINDOW_START = 2.0
MIN_WINDOW_DECADES = 1.0

# Trajectory CSV columns
TIME = 't'
L2_NORM = 'L2'
L4_NORM = 'L4'
L6_NORM = 'L6'
X_H1 = 'X_H1'
X_WEIGHT = 'X_weight'
BOUNDARY_MASS = 'boundary_mass'
DUHAMEL_RESIDUAL = 'duhamel_residual'

# Strang order study
CONVERGENCE_FINAL_TIME = 1.0
CONVERGENCE_REFERENCE_REFINEMENT = 8
ORDER_RANGE = (1.8, 2.2)

# Decay slopes: exponent p -> allowed distance from the target −(3/2)(1 − 2/p)
DECAY_EXPONENTS = (6.0, 4.0, 2.0)
DECAY_SLOPE_TOLERANCES = {6.0: 0.15, 4.0: 0.15, 2.0: 0.1}
INITIAL_DATUM_WIDTH = 1.0
