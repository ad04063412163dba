import glob
import os

import pandas as pd
import pytest

from analysis.check_record import at_most
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from consts.path_consts import REPORT_FILE_NAME, SUMMARY_FILE_NAME
from experiment_runner import EXPERIMENTS
from models.experiment_tag import ExperimentTag
from scripts.distorted_fourier_main import build_parser, main
from utils.file_utils import to_json


def fake_experiment(defect: float):
    class FakeExperiment(IExperiment):
        def __init__(self, config):
            self._config = config

        def run(self) -> ExperimentOutcome:
            return ExperimentOutcome(checks=[at_most('defect', defect, 1.0)])

        @property
        def tag(self) -> ExperimentTag:
            return ExperimentTag.SPECTRA

    return FakeExperiment


def test_every_experiment_has_a_subcommand():
    parser = build_parser()

    for tag in ExperimentTag:
        args = parser.parse_args([tag.value, '--seed', '4', '--unsafe'])
        assert args.command == tag.value and args.seed == 4 and args.unsafe


@pytest.mark.parametrize('defect, exit_code', [(0.5, 0), (2.0, 1)])
def test_exit_code_follows_hard_failures(monkeypatch, tmp_path, defect, exit_code):
    monkeypatch.setitem(EXPERIMENTS, ExperimentTag.SPECTRA, fake_experiment(defect))
    assert main(['spectra', '--out', str(tmp_path)]) == exit_code


def test_invalid_config_exits_with_failure(tmp_path):
    path = os.path.join(tmp_path, 'config.json')
    to_json({'tag': 'nls'}, path)

    assert main(['spectra', '--config', path, '--out', str(tmp_path)]) == 1


def test_summary_collects_run_reports(monkeypatch, tmp_path, capsys):
    monkeypatch.setitem(EXPERIMENTS, ExperimentTag.SPECTRA, fake_experiment(0.5))
    main(['spectra', '--out', str(tmp_path)])
    reports = glob.glob(os.path.join(tmp_path, '*', REPORT_FILE_NAME))

    assert main(['summary', *reports, '--out', str(tmp_path)]) == 0

    summary = pd.read_csv(os.path.join(tmp_path, SUMMARY_FILE_NAME))
    assert summary['check'].tolist() == ['defect']
    assert 'defect' in capsys.readouterr().out
