from datetime import datetime

import pytz

from consts.datetime_consts import DATETIME_FORMAT


def get_current_datetime() -> str:
    return datetime.now(tz=pytz.utc).strftime(DATETIME_FORMAT)
