# Directories
CACHE_DIR_PATH = r'.cache'
SCATTERING_TABLES_CACHE_DIR = rf'{CACHE_DIR_PATH}/scattering_tables'
M_KERNELS_CACHE_DIR = rf'{CACHE_DIR_PATH}/m_kernels'
DEFAULT_OUTPUT_DIR = r'outputs'

# Files
REPORT_FILE_NAME = 'report.json'
SUMMARY_FILE_NAME = 'summary.csv'
PHASE_SHIFTS_FILE_NAME = 'phase_shifts.csv'
SPECTRAL_FIELD_FILE_NAME = 'spectral_field.csv'
DISPERSIVE_FILE_NAME = 'dispersive.csv'
HARNESS_FILE_NAME = 'harness_ratios.csv'
SYMBOL_TERMS_FILE_NAME = 'symbol_terms.csv'
HOLDER_FILE_NAME = 'holder_ratios.csv'
M_KERNEL_SLICE_FILE_NAME = 'm_kernel_slice.csv'
TRAJECTORY_FILE_NAME = 'trajectory.csv'
IDENTITY_FILE_NAME = 'identity.csv'
