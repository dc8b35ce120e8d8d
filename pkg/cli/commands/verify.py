"""
Verify Command

Writes the bound-verification table and exits 3 when any point fails.
"""

import argparse
import json

from cli.base import BaseCommand, ExitCode
from cli.commands.grid import add_grid_arguments, build_grid
from cli.config import CliConfig
from core.oracle import verify_bounds


class VerifyCommand(BaseCommand):
    NAME = "verify"
    HELP = "Check M < 1/eps, the cascade cap and oracle gap intervals over a grid"

    @classmethod
    def register_arguments(cls, parser: argparse.ArgumentParser) -> None:
        add_grid_arguments(parser)
        parser.add_argument("--depth", type=int, help="Oracle enumeration depth")

    def execute(self, config: CliConfig) -> ExitCode:
        table = verify_bounds(build_grid(config), depth=config.depth)

        path = config.output_path("bounds")
        path.parent.mkdir(parents=True, exist_ok=True)
        if config.format == "json":
            records = table.to_frame(full=True).to_dict(orient="records")
            path.write_text(json.dumps(records, indent=2), encoding="utf-8")
        else:
            table.write_csv(path)
        self.record_output(path)

        failed = table.failures()
        for row in failed:
            self.logger.error(
                "Bound check failed",
                alpha=row.alpha,
                epsilon=row.epsilon,
                failures=row.failures,
            )
        self.emit(f"points={len(table.rows)} failed={len(failed)} table={path}")
        table.raise_for_failures()
        return ExitCode.OK
