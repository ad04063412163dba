# Hölder harness
DEFAULT_HOLDER_P = 4.0
DEFAULT_HOLDER_Q = 4.0
DEFAULT_HOLDER_R_PRIME = 2.0
DEFAULT_HOLDER_SYMBOLS = ('energy_share', 'balanced', 'low_high')
DEFAULT_SEPARATION_TOLERANCE = 1e-4
HOLDER_SPREAD_LIMIT = 10.0

# Commutator harness
DEFAULT_COMMUTATOR_P = 2.0
DEFAULT_COMMUTATOR_Q = 2.2
COMMUTATOR_SPREAD_LIMIT = 5.0
FREE_COMMUTATOR_TOLERANCE = 1e-10

# Dispersive harness
DEFAULT_DISPERSIVE_P = 6.0
DEFAULT_DISPERSIVE_FINAL_TIME = 20.0
DISPERSIVE_SAMPLE_COUNT = 12
DISPERSIVE_SPREAD_LIMIT = 3.0
INTERTWINING_FINAL_TIME = 10.0
INTERTWINING_SAMPLE_COUNT = 5

# Transform checks
PLANCHEREL_TOLERANCE = 1e-6
INVERSION_TOLERANCE = 1e-6
DIAGONALIZATION_TOLERANCE = 1e-4
UNITARITY_TOLERANCE = 1e-6
INTERTWINING_TOLERANCE = 1e-5
SQUARE_FUNCTION_CONSTANT = 4.0
RANDOM_FAMILY_SIZE = 10

# Identity check
IDENTITY_TOLERANCE = 1e-3
IDENTITY_REFINEMENT_FACTOR = 2.0

# Test data
SQUARE_FUNCTION_EXPONENTS = (2.0, 4.0)
IDENTITY_WIDTHS = (1.0, 1.2, 0.8)
IDENTITY_FLOOR = 1e-12
DIRECTIONAL_CONTRAST_MIN_L = 1
PRODUCT_IDENTITY_TOLERANCE = 1e-6
IDENTITY_DEFECT_DROP = 2.0
