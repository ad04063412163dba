import os
import sys
from argparse import ArgumentParser, Namespace
from typing import List, Optional

from analysis.report_summarizer import format_summary, load_reports, report_summary
from config.config_loader import load_config
from consts.path_consts import DEFAULT_OUTPUT_DIR, SUMMARY_FILE_NAME
from exceptions import DistortedFourierError
from experiment_runner import run
from models.experiment_tag import ExperimentTag
from tools.logging import logger
from utils.file_utils import to_csv

SUMMARY_COMMAND = 'summary'
SUCCESS_EXIT_CODE = 0
FAILURE_EXIT_CODE = 1


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(description='Distorted Fourier experiments for -Δ + V on R^3 and the quadratic NLS lab')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for tag in ExperimentTag:
        experiment_parser = subparsers.add_parser(tag.value, help=f'Run the `{tag.value}` experiment')
        experiment_parser.add_argument('--config', type=str, default=None, help='JSON experiment config (defaults when absent)')
        experiment_parser.add_argument('--out', type=str, default=None, help='Output directory')
        experiment_parser.add_argument('--seed', type=int, default=None, help='Seed of the randomized families')
        experiment_parser.add_argument('--unsafe', action='store_true', help='Lift the documented parameter ranges')

    summary_parser = subparsers.add_parser(SUMMARY_COMMAND, help='Consolidate run reports into one table')
    summary_parser.add_argument('reports', nargs='*', help='report.json files')
    summary_parser.add_argument('--out', type=str, default=None, help='Output directory of summary.csv')

    return parser


def run_experiment(args: Namespace) -> int:
    config = load_config(args.config, ExperimentTag(args.command), seed=args.seed, unsafe=args.unsafe)
    report = run(config, args.out)

    return SUCCESS_EXIT_CODE if report.succeeded else FAILURE_EXIT_CODE


def summarize(args: Namespace) -> int:
    summary = report_summary(load_reports(args.reports))
    output_dir = args.out or DEFAULT_OUTPUT_DIR
    to_csv(summary, os.path.join(output_dir, SUMMARY_FILE_NAME))
    print(format_summary(summary))

    return SUCCESS_EXIT_CODE


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        if args.command == SUMMARY_COMMAND:
            return summarize(args)

        return run_experiment(args)
    except DistortedFourierError as e:
        logger.error(str(e))
        return FAILURE_EXIT_CODE


if __name__ == '__main__':
    sys.exit(main())
