"""
CLI Configuration

Resolves the options of one command invocation. Values come from three
layers: settings defaults, an optional JSON file passed with --config, and
explicit flags. Later layers win.
"""

import argparse
import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.analytics.statistics import RestrictedMode
from core.config import settings
from core.model import ModelParams

OutputFormat = Literal["csv", "json"]


class CliConfig(BaseModel):
    """Options of one command invocation; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid")

    subcommand: str
    alpha: float
    epsilon: float
    horizon: int
    seeds: List[int] = Field(default_factory=lambda: [0])
    out: Optional[Path] = None
    format: OutputFormat = "csv"
    depth: Optional[int] = None
    l0: Optional[float] = None
    alpha_grid: Optional[List[float]] = None
    eps_grid: Optional[List[float]] = None
    eps_relative: bool = False
    workers: int = Field(default_factory=lambda: settings.sweep_workers, ge=1)
    restricted_mode: RestrictedMode = "no_preceding_switch"
    marginal: bool = False

    @field_validator("seeds")
    @classmethod
    def check_seeds(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("at least one seed is required")
        return v

    @property
    def params(self) -> ModelParams:
        return ModelParams(alpha=self.alpha, epsilon=self.epsilon)

    def output_path(self, default_name: str) -> Path:
        if self.out is not None:
            return self.out
        return Path(settings.output_dir) / f"{default_name}.{self.format}"


# =============================================================================
# Flag Parsing
# =============================================================================

def parse_float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def parse_seeds(text: str) -> List[int]:
    """``"32"`` means seeds 0..31; ``"3,7,11"`` lists seeds explicitly."""
    try:
        if "," in text:
            return [int(item) for item in text.split(",") if item.strip()]
        count = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a seed count or list, got {text!r}")
    if count < 1:
        raise argparse.ArgumentTypeError(f"seed count must be >= 1, got {count}")
    return list(range(count))


def add_shared_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags every subcommand accepts. Defaults are None so layering can tell them apart."""
    parser.add_argument("--alpha", type=float, help="Signal precision, 1/2 < alpha < 1")
    parser.add_argument(
        "--eps",
        dest="epsilon",
        type=float,
        help="State-switch probability, 0 < eps < alpha(1-alpha)",
    )
    parser.add_argument("--n", dest="horizon", type=int, help="Number of periods N")
    seeds = parser.add_mutually_exclusive_group()
    seeds.add_argument("--seed", type=int, help="Single seed")
    seeds.add_argument("--seeds", type=parse_seeds, help="Seed count or comma-separated list")
    parser.add_argument("--out", type=Path, help="Output file")
    parser.add_argument("--format", choices=["csv", "json"], help="Output format")
    parser.add_argument("--config", type=Path, help="JSON file of option values")


def load_config_file(path: Path) -> Dict[str, Any]:
    with path.open(encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must hold a JSON object")
    return data


def resolve_config(subcommand: str, args: argparse.Namespace) -> CliConfig:
    """Merge settings defaults, the --config file and explicit flags."""
    merged: Dict[str, Any] = {
        "alpha": settings.default_alpha,
        "epsilon": settings.default_epsilon,
        "horizon": settings.default_horizon,
        "depth": settings.oracle_depth,
    }

    config_path = getattr(args, "config", None)
    if config_path is not None:
        merged.update(load_config_file(config_path))
        if "seed" in merged:
            merged["seeds"] = [merged.pop("seed")]

    flags = {
        key: value
        for key, value in vars(args).items()
        if value is not None and key not in {"config", "command", "seed", "handler"}
    }
    if getattr(args, "seed", None) is not None:
        flags["seeds"] = [args.seed]
    merged.update(flags)
    merged["subcommand"] = subcommand
    return CliConfig.model_validate(merged)
