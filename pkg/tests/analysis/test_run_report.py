import os

import pytest

from analysis.check_record import at_most, reported
from analysis.environment_fingerprint import EnvironmentFingerprint
from analysis.pipeline_stage import pipeline_stage
from analysis.report_summarizer import format_summary, load_reports, report_summary
from analysis.run_report import RunReport, config_echo, make_run_id
from config.config_loader import load_config, parse_config
from consts.report_consts import SUMMARY_COLUMNS, CHECK, STATUS
from exceptions import ConfigurationError, DomainError, PipelineError, SchemaVersionError
from models.experiment_tag import ExperimentTag
from utils.file_utils import read_json, to_json


@pytest.fixture
def config():
    return load_config(None, ExperimentTag.TRANSFORM_CHECK)


@pytest.fixture
def report(config):
    return RunReport(
        run_id=make_run_id(config),
        tag=config.tag,
        checks=[at_most('plancherel', 1e-10, 1e-8), reported('bound_states', 0), at_most('inversion', 1.0, 1e-8)],
        fingerprint=EnvironmentFingerprint.collect(),
        config=config_echo(config)
    )


@pytest.fixture
def report_path(tmp_path, report):
    path = os.path.join(tmp_path, 'report.json')
    to_json(report.to_dict(encode_json=True), path)

    return path


def test_run_id_is_deterministic(config):
    run_id = make_run_id(config)

    assert run_id == make_run_id(load_config(None, ExperimentTag.TRANSFORM_CHECK))
    assert run_id.startswith('transform-check-')
    assert run_id != make_run_id(load_config(None, ExperimentTag.TRANSFORM_CHECK, seed=1))


def test_config_echo_parses_back(config):
    assert parse_config(config_echo(config)) == config


def test_checks_must_be_unique(report):
    with pytest.raises(ConfigurationError, match='plancherel'):
        RunReport(report.run_id, report.tag, report.checks * 2, report.fingerprint, report.config)


def test_hard_failures_decide_success(report):
    assert [check.name for check in report.hard_failures] == ['inversion']
    assert not report.succeeded


def test_partial_runs_never_succeed(report):
    partial = RunReport(report.run_id, report.tag, report.checks[:2], report.fingerprint, report.config, partial=True)

    assert not partial.hard_failures
    assert not partial.succeeded


def test_reports_load_back(report_path, report):
    loaded, = load_reports([report_path])

    assert loaded.run_id == report.run_id
    assert loaded.tag == ExperimentTag.TRANSFORM_CHECK
    assert [check.status for check in loaded.checks] == [check.status for check in report.checks]


def test_reports_of_another_schema_are_refused(report_path):
    data = read_json(report_path)
    data['schema_version'] = '0'
    to_json(data, report_path)

    with pytest.raises(SchemaVersionError):
        load_reports([report_path])


def test_summary_has_one_row_per_check(report):
    summary = report_summary([report, report])

    assert list(summary.columns) == SUMMARY_COLUMNS
    assert len(summary) == 6
    assert summary[CHECK].tolist()[:3] == ['plancherel', 'bound_states', 'inversion']
    assert summary[STATUS].tolist()[:3] == ['pass', 'report', 'fail']
    assert 'plancherel' in format_summary(summary)


def test_empty_summary_keeps_the_columns():
    summary = report_summary([])

    assert summary.empty
    assert list(summary.columns) == SUMMARY_COLUMNS
    assert format_summary(summary) == ' '.join(SUMMARY_COLUMNS)


def test_pipeline_stage_names_the_failing_stage():
    with pytest.raises(PipelineError) as error:
        with pipeline_stage('transform'):
            raise DomainError('bad exponent')

    assert error.value.stage == 'transform'
    assert isinstance(error.value.cause, DomainError)


def test_pipeline_stage_leaves_other_errors_alone():
    with pytest.raises(KeyError):
        with pipeline_stage('transform'):
            raise KeyError('missing')
