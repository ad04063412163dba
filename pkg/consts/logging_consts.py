LOGGER_NAME = 'DistortedFourierLogger'
LOG_FORMAT = '%(asctime)s [%(levelname)s] %(module)s: %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
LOG_LEVEL_ENV_VARIABLE = 'DISTORTED_FOURIER_LOG_LEVEL'
DEFAULT_LOG_LEVEL = 'INFO'
