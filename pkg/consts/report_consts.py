# Summary columns
RUN = 'run'
TAG = 'tag'
CHECK = 'check'
VALUE = 'value'
THRESHOLD = 'threshold'
STATUS = 'status'
HARD = 'hard'
TIMESTAMP = 'timestamp'
SUMMARY_COLUMNS = [RUN, TAG, CHECK, VALUE, THRESHOLD, STATUS, HARD, TIMESTAMP]

# Harness columns
FAMILY = 'family'
PARAMETER = 'parameter'
RATIO = 'ratio'

HARNESS_LIMITATION = 'Norm-ratio harnesses probe boundedness on a fixed documented family; they do not certify operator norms.'

# Artifact columns
TIME_COLUMN = 't'
SYMBOL = 'symbol'
GRID_NODES = 'n_r'
LHS_REAL = 'lhs_re'
LHS_IMAG = 'lhs_im'
RHS_REAL = 'rhs_re'
RHS_IMAG = 'rhs_im'
DEFECT = 'defect'
