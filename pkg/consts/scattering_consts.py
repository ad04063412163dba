import math

# Potential
SUPPORT_THRESHOLD = 1e-14
DECAY_POWER = 6

# Radial integration
MAX_INTEGRATION_STEP = 0.005
STAGE_OFFSET = 1e-9
FIRST_MATCHING_OFFSET = 2.0
SECOND_MATCHING_OFFSET = 4.0
MATCHING_CONDITION_LIMIT = 1e8

# Spectral assumption checks
RESONANCE_THRESHOLD = 0.05
HARDY_CONSTANT = 0.25
MAX_BRANCH_JUMP = 0.5 * math.pi
LEVINSON_TOLERANCE = 0.2
WRONSKIAN_TOLERANCE = 1e-6

# Oracles
BORN_RELATIVE_TOLERANCE = 0.05
WELL_PHASE_TOLERANCE = 1e-6
COMPLETENESS_TEST_WIDTHS = (1.0, 1.5, 2.0)

# Export columns
PHASE_SHIFT = 'delta'
UNWRAPPED_PHASE_SHIFT = 'delta_unwrapped'
BORN_PHASE_SHIFT = 'delta_born'

# Oracle potentials
WELL_ORACLE_DEPTH = 1.0
WELL_ORACLE_WIDTH = 1.0
BORN_ORACLE_AMPLITUDE = 0.01
BORN_SIGNIFICANCE_FLOOR = 1e-8
RADIATION_TEST_MOMENTUM = 1.0
RADIATION_RADII_OFFSETS = (2.0, 4.0, 8.0)
