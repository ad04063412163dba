from typing import List, Sequence

import pandas as pd

from analysis.run_report import RunReport
from consts.miscellaneous_consts import SCHEMA_VERSION
from consts.report_consts import SUMMARY_COLUMNS, RUN, TAG, CHECK, VALUE, THRESHOLD, STATUS, HARD, TIMESTAMP
from exceptions import SchemaVersionError
from utils.file_utils import read_json

SCHEMA_VERSION_KEY = 'schema_version'


def load_reports(paths: Sequence[str]) -> List[RunReport]:
    reports = []

    for path in paths:
        data = read_json(path)
        version = data.get(SCHEMA_VERSION_KEY)

        if version != SCHEMA_VERSION:
            raise SchemaVersionError(f"Report {path} has schema version {version}, expected {SCHEMA_VERSION}")

        reports.append(RunReport.from_dict(data))

    return reports


def report_summary(reports: Sequence[RunReport]) -> pd.DataFrame:
    """One row per check per run, in report order, with the stable SUMMARY_COLUMNS."""
    versions = {report.schema_version for report in reports}

    if len(versions) > 1:
        raise SchemaVersionError(f"Reports mix schema versions {sorted(versions)}")

    records = [
        {
            RUN: report.run_id,
            TAG: report.tag.value,
            CHECK: check.name,
            VALUE: check.value,
            THRESHOLD: check.threshold,
            STATUS: check.status.value,
            HARD: check.hard,
            TIMESTAMP: report.fingerprint.timestamp
        }
        for report in reports
        for check in report.checks
    ]

    return pd.DataFrame.from_records(records, columns=SUMMARY_COLUMNS)


def format_summary(summary: pd.DataFrame) -> str:
    if summary.empty:
        return ' '.join(SUMMARY_COLUMNS)

    return summary.to_string(index=False)
