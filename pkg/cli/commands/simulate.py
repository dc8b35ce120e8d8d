"""
Simulate Command

Runs the full model once per seed and writes the fad report.
"""

import argparse

from cli.base import BaseCommand, ExitCode
from cli.config import CliConfig
from core.analytics import fad_report, write_report
from core.engine import RunConfig, simulate


def add_restricted_mode(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--restricted-mode",
        choices=["no_preceding_switch", "consecutive_pair"],
        help="Which action changes count as restricted fads",
    )


class SimulateCommand(BaseCommand):
    NAME = "simulate"
    HELP = "Simulate the model and report change frequencies"

    @classmethod
    def register_arguments(cls, parser: argparse.ArgumentParser) -> None:
        add_restricted_mode(parser)

    def execute(self, config: CliConfig) -> ExitCode:
        params = config.params
        self.logger.info(
            "Simulating",
            alpha=params.alpha,
            epsilon=params.epsilon,
            horizon=config.horizon,
            seeds=len(config.seeds),
        )
        traces = [
            simulate(RunConfig(params=params, horizon=config.horizon, seed=seed))
            for seed in config.seeds
        ]
        report = fad_report(traces, config.restricted_mode)

        path = write_report(report, config.output_path("report"), config.format)
        self.record_output(path)
        self.emit(report.summary_line())
        return ExitCode.OK
