# Littlewood-Paley ladder
DEFAULT_LADDER_DEPTH = 5
MODULATION_PERIOD = 4
PARTITION_TOLERANCE = 1e-10

# Sobolev scales
MAX_SOBOLEV_REGULARITY = 2.0

# Fractional integration blend
LAMBDA_LOWER_EDGE = 1.0
LAMBDA_UPPER_EDGE = 2.0

# Harness families
DILATION_EXPONENTS = (-3, -2, -1, 0, 1, 2, 3)
FAMILY_RESOLUTION_TOLERANCE = 1e-8
MAX_MODULATION_FREQUENCY = 2.0

# Export columns
SPECTRAL_RE = 're'
SPECTRAL_IM = 'im'
