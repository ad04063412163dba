UTF_8_ENCODING = 'utf-8-sig'
JSON_ENCODING = 'utf-8'
CSV_FILE_SUFFIX = '.csv'
NPZ_FILE_SUFFIX = '.npz'
SCHEMA_VERSION = '1.0'
OUTPUT_DIR_ENV_VARIABLE = 'DISTORTED_FOURIER_OUTPUT_DIR'
DEFAULT_RANGE_FACTOR = 10.0
