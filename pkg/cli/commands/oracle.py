"""
Oracle Command

Certified intervals for the expected gap to the next sign switch, either
from one starting value (--l0) or from every post-switch value reachable
within the configured number of periods.
"""

import argparse
import json

import pandas as pd

from cli.base import BaseCommand, ExitCode
from cli.config import CliConfig
from core.model import derive_constants
from core.oracle import expected_gap_interval, post_switch_values

ORACLE_COLUMNS = [
    "alpha",
    "epsilon",
    "l0",
    "value_low",
    "value_high",
    "depth",
    "mass_unresolved",
    "low_confidence",
    "M",
]


class OracleCommand(BaseCommand):
    NAME = "oracle"
    HELP = "Bound the expected sign-switch gap by enumeration"

    @classmethod
    def register_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--depth", type=int, help="Enumeration depth")
        parser.add_argument("--l0", type=float, help="Starting public likelihood")

    def execute(self, config: CliConfig) -> ExitCode:
        params = config.params
        bound_m = derive_constants(params).fad_bound_M
        starts = [config.l0] if config.l0 is not None else post_switch_values(params)

        rows = []
        for l0 in starts:
            result = expected_gap_interval(l0, params, config.depth)
            row = {"alpha": params.alpha, "epsilon": params.epsilon, **result.model_dump()}
            rows.append({**row, "M": bound_m})
        frame = pd.DataFrame(rows, columns=ORACLE_COLUMNS)

        if config.out is not None:
            config.out.parent.mkdir(parents=True, exist_ok=True)
            if config.format == "json":
                config.out.write_text(json.dumps(rows, indent=2), encoding="utf-8")
            else:
                frame.to_csv(config.out, index=False, float_format="%.17g")
            self.record_output(config.out)

        worst = frame.loc[frame["value_high"].idxmax()]
        below = "true" if bool((frame["value_high"] < bound_m).all()) else "false"
        self.emit(
            f"starts={len(frame)} low={worst['value_low']:.6f} "
            f"high={worst['value_high']:.6f} M={bound_m:.6f} below_M={below}"
        )
        return ExitCode.OK
