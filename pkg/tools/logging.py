import os
from logging import basicConfig, getLogger, Logger

from consts.logging_consts import LOGGER_NAME, LOG_FORMAT, LOG_DATE_FORMAT, LOG_LEVEL_ENV_VARIABLE, DEFAULT_LOG_LEVEL


def get_logger() -> Logger:
    """The run logger, tagging each record with the emitting module; the level comes from the environment."""
    level = os.getenv(LOG_LEVEL_ENV_VARIABLE, DEFAULT_LOG_LEVEL).upper()
    basicConfig(format=LOG_FORMAT, level=level, datefmt=LOG_DATE_FORMAT)
    run_logger = getLogger(LOGGER_NAME)
    run_logger.setLevel(level)

    return run_logger


logger = get_logger()
