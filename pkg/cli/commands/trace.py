"""
Trace Command

Writes one sample path for plotting, plus a companion file of guide
values (the cascade boundaries, zero and the supremum of |l|).
"""

import argparse
from pathlib import Path

from cli.base import BaseCommand, ExitCode
from cli.config import CliConfig
from core.engine import RunConfig, simulate, simulate_l_chain, write_guides, write_trace
from core.model import derive_constants


def guides_path(trace_path: Path) -> Path:
    return trace_path.with_name(f"{trace_path.stem}.guides.csv")


class TraceCommand(BaseCommand):
    NAME = "trace"
    HELP = "Write a plot-ready trace of the public likelihood"

    @classmethod
    def register_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--marginal",
            action="store_true",
            default=None,
            help="Drive the l-chain alone, without a state path",
        )

    def execute(self, config: CliConfig) -> ExitCode:
        if len(config.seeds) != 1:
            raise ValueError(f"trace writes one path; got {len(config.seeds)} seeds")
        run = RunConfig(params=config.params, horizon=config.horizon, seed=config.seeds[0])
        trace = simulate_l_chain(run) if config.marginal else simulate(run)

        path = write_trace(trace, config.output_path("trace"), config.format)
        guides = write_guides(derive_constants(run.params), guides_path(path))
        self.record_output(path)
        self.record_output(guides)

        self.emit(f"trace={path} guides={guides} periods={len(trace)}")
        return ExitCode.OK
