from enum import Enum


class CheckStatus(Enum):
    PASS = 'pass'
    FLAG = 'flag'
    FAIL = 'fail'
    INCONCLUSIVE = 'inconclusive'
    REPORT = 'report'

    @property
    def is_failure(self) -> bool:
        return self == CheckStatus.FAIL
