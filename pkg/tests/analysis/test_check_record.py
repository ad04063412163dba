import pytest

from analysis.check_record import at_least, at_most, holds, inconclusive, reported, within
from models.check_status import CheckStatus


@pytest.mark.parametrize('value, hard, status', [
    (0.5, True, CheckStatus.PASS),
    (2.0, True, CheckStatus.FAIL),
    (2.0, False, CheckStatus.FLAG),
    (float('nan'), True, CheckStatus.FAIL)
])
def test_at_most(value, hard, status):
    record = at_most('defect', value, 1.0, hard=hard)

    assert record.status == status
    assert record.is_hard_failure == (status == CheckStatus.FAIL)


def test_at_least():
    assert at_least('gap', 2.0, 1.0).status == CheckStatus.PASS
    assert at_least('gap', 0.5, 1.0).status == CheckStatus.FAIL


def test_within_records_the_tolerance_as_threshold():
    record = within('slope', -0.95, -1.0, 0.1)

    assert record.status == CheckStatus.PASS
    assert record.threshold == 0.1
    assert within('slope', float('inf'), -1.0, 0.1).status == CheckStatus.FAIL


def test_holds():
    assert holds('monotone', True).value == 1.0
    assert holds('monotone', False, hard=False).status == CheckStatus.FLAG


def test_reported_and_inconclusive_checks_never_fail():
    report_record = reported('bound_states', 3)
    skipped = inconclusive('identity', 0.5, 1e-3, 'dropped mass')

    assert report_record.status == CheckStatus.REPORT and report_record.threshold is None
    assert skipped.status == CheckStatus.INCONCLUSIVE
    assert not report_record.is_hard_failure and not skipped.is_hard_failure
