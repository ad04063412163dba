# Symbol separation
SEPARATION_PERIOD = 4
BLOCK_STRETCH = 4
SEPARATION_SAMPLES = 64
DEFAULT_FOURIER_TRUNCATION = 6
FOURIER_TRUNCATION_STEP = 6
MAX_FOURIER_TRUNCATION = 24
TERM_BUDGET = 10_000
PRUNED_MASS_FRACTION = 0.1
SEPARABLE_RANK_TOLERANCE = 1e-13
RANK_REFINEMENT_FACTOR = 1e-2
MAX_SAMPLED_AXIS = 48
DECAY_FIT_FLOOR = 1e-12
DECAY_FIT_TARGET = -8.0

# Block coordinates: the rescaled variable x = k / (BLOCK_STRETCH·N) is kept fixed on a plateau and folded back
# smoothly elsewhere so that the symbol is never sampled near the origin
DOMINANT_PLATEAU = (0.25, 1.0)
DOMINANT_RAMP_WIDTH = 0.25
DOMINANT_FOLD_AMPLITUDE = 0.5
COMPANION_PLATEAU = 1.0
COMPANION_RAMP_END = 1.75

# Coifman-Meyer harness
HOLDER_EPSILON = 0.1
HOLDER_FAMILY_SPREAD = 10.0
EXPONENT_TOLERANCE = 1e-12
CM_SAMPLE_AXIS = 40

# M kernel
M_KERNEL_NORMALIZATION_POWER = 1.5
M_KERNEL_MEMORY_BUDGET = 512 * 1024 ** 2
M_KERNEL_TAPER_START = 0.5
TRIANGLE_INTERIOR_DISTANCE = 1.0
TRIANGLE_ORACLE_TOLERANCE = 1e-3
TRIANGLE_ORACLE_MIN_R_MAX = 40.0
SYMMETRY_TOLERANCE = 1e-10
WEAK_FORM_TOLERANCE = 1e-4
WEAK_FORM_WIDTHS = (1.0, 1.3, 0.8)

# Derivative identity
INCONCLUSIVE_DROPPED_MASS = 0.01

# Export columns
BLOCK_SCALE = 'N'
FIRST_MODE = 'n1'
SECOND_MODE = 'n2'
THIRD_MODE = 'n3'
COEFFICIENT_MAGNITUDE = 'abs_a'
FIRST_MOMENTUM = 'k1'
SECOND_MOMENTUM = 'k2'
THIRD_MOMENTUM = 'k3'
KERNEL_REAL = 're'
KERNEL_IMAGINARY = 'im'
