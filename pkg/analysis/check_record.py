from dataclasses import dataclass
from typing import Optional

import numpy as np
from dataclasses_json import dataclass_json

from models.check_status import CheckStatus


@dataclass_json
@dataclass
class CheckRecord:
    name: str
    value: float
    threshold: Optional[float]
    status: CheckStatus
    hard: bool = True
    note: Optional[str] = None

    @property
    def is_hard_failure(self) -> bool:
        return self.hard and self.status.is_failure


def at_most(name: str, value: float, threshold: float, hard: bool = True, note: Optional[str] = None) -> CheckRecord:
    passed = not np.isnan(value) and value <= threshold
    return CheckRecord(name, float(value), threshold, _status(passed, hard), hard, note)


def at_least(name: str, value: float, threshold: float, hard: bool = True, note: Optional[str] = None) -> CheckRecord:
    passed = not np.isnan(value) and value >= threshold
    return CheckRecord(name, float(value), threshold, _status(passed, hard), hard, note)


def within(name: str,
           value: float,
           target: float,
           tolerance: float,
           hard: bool = True,
           note: Optional[str] = None) -> CheckRecord:
    """|value − target| ≤ tolerance; the recorded threshold is the tolerance."""
    passed = bool(np.isfinite(value)) and abs(value - target) <= tolerance
    return CheckRecord(name, float(value), tolerance, _status(passed, hard), hard, note)


def holds(name: str, condition: bool, hard: bool = True, note: Optional[str] = None) -> CheckRecord:
    return CheckRecord(name, float(condition), 1.0, _status(condition, hard), hard, note)


def reported(name: str, value: float, note: Optional[str] = None) -> CheckRecord:
    return CheckRecord(name, float(value), None, CheckStatus.REPORT, False, note)


def inconclusive(name: str, value: float, threshold: Optional[float], note: str) -> CheckRecord:
    return CheckRecord(name, float(value), threshold, CheckStatus.INCONCLUSIVE, False, note)


def _status(passed: bool, hard: bool) -> CheckStatus:
    if passed:
        return CheckStatus.PASS

    return CheckStatus.FAIL if hard else CheckStatus.FLAG
