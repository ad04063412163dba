import os
from typing import Dict, List, Optional, Type

from pandas import DataFrame

from analysis.environment_fingerprint import EnvironmentFingerprint
from analysis.experiment_interface import ExperimentOutcome, IExperiment
from analysis.experiments.dispersive_experiment import DispersiveExperiment
from analysis.experiments.estimates_experiment import EstimatesExperiment
from analysis.experiments.identity_experiment import IdentityExperiment
from analysis.experiments.m_kernel_experiment import MKernelExperiment
from analysis.experiments.nls_experiment import NLSExperiment
from analysis.experiments.spectra_experiment import SpectraExperiment
from analysis.experiments.transform_check_experiment import TransformCheckExperiment
from analysis.pipeline_stage import pipeline_stage
from analysis.run_report import RunReport, config_echo, make_run_id
from config.experiment_config import ExperimentConfig
from consts.miscellaneous_consts import OUTPUT_DIR_ENV_VARIABLE
from consts.path_consts import DEFAULT_OUTPUT_DIR, REPORT_FILE_NAME
from exceptions import PipelineError
from models.experiment_tag import ExperimentTag
from tools.logging import logger
from utils.file_utils import to_csv, to_json

EXPERIMENTS: Dict[ExperimentTag, Type[IExperiment]] = {
    ExperimentTag.SPECTRA: SpectraExperiment,
    ExperimentTag.TRANSFORM_CHECK: TransformCheckExperiment,
    ExperimentTag.DISPERSIVE: DispersiveExperiment,
    ExperimentTag.ESTIMATES: EstimatesExperiment,
    ExperimentTag.IDENTITY: IdentityExperiment,
    ExperimentTag.MKERNEL: MKernelExperiment,
    ExperimentTag.NLS: NLSExperiment
}


def resolve_output_dir(cli_output_dir: Optional[str], config: ExperimentConfig) -> str:
    """--out, then the environment override, then the config, then the default."""
    return cli_output_dir or os.environ.get(OUTPUT_DIR_ENV_VARIABLE) or config.output_dir or DEFAULT_OUTPUT_DIR


class ExperimentRunner:
    def __init__(self, output_dir: str):
        self._output_dir = output_dir

    def run(self, config: ExperimentConfig) -> RunReport:
        """
        Runs the tagged experiment and writes report.json plus its CSV artifacts under <output_dir>/<run id>. A
        pipeline failure still writes a report, marked partial, before the PipelineError propagates.
        """
        run_id = make_run_id(config)
        run_dir = os.path.join(self._output_dir, run_id)
        logger.info(f"Starting to run the `{config.tag.value}` experiment as {run_id}")

        try:
            with pipeline_stage('setup'):
                experiment = EXPERIMENTS[config.tag](config)

            with pipeline_stage(config.tag.value):
                outcome = experiment.run()
        except PipelineError as e:
            logger.error(str(e))
            self._write_report(run_id, config, ExperimentOutcome(partial=True, error=str(e)), run_dir)
            raise

        report = self._write_report(run_id, config, outcome, run_dir)
        self._log_summary(report)

        return report

    def _write_report(self,
                      run_id: str,
                      config: ExperimentConfig,
                      outcome: ExperimentOutcome,
                      run_dir: str) -> RunReport:
        report = RunReport(
            run_id=run_id,
            tag=config.tag,
            checks=outcome.checks,
            fingerprint=EnvironmentFingerprint.collect(),
            config=config_echo(config),
            artifacts=self._write_artifacts(outcome.artifacts, run_dir),
            partial=outcome.partial,
            error=outcome.error
        )
        to_json(report.to_dict(encode_json=True), os.path.join(run_dir, REPORT_FILE_NAME))

        return report

    @staticmethod
    def _write_artifacts(artifacts: Dict[str, DataFrame], run_dir: str) -> List[str]:
        for file_name, frame in sorted(artifacts.items()):
            to_csv(frame, os.path.join(run_dir, file_name))

        return sorted(artifacts)

    @staticmethod
    def _log_summary(report: RunReport) -> None:
        failures = report.hard_failures

        if report.partial:
            logger.warning(f"Run {report.run_id} is partial: {report.error}")

        if failures:
            logger.warning(f"Run {report.run_id} has {len(failures)} hard failures: {[c.name for c in failures]}")
        else:
            logger.info(f"Run {report.run_id} finished with {len(report.checks)} checks and no hard failures")


def run(config: ExperimentConfig, output_dir: Optional[str] = None) -> RunReport:
    return ExperimentRunner(resolve_output_dir(output_dir, config)).run(config)
