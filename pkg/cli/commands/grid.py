"""Grid flags shared by sweep and verify."""

import argparse
from typing import List

from cli.config import CliConfig, parse_float_list
from core.model import ModelParams
from core.oracle import default_grid
from core.oracle.bounds import GRID_ALPHAS, GRID_EPSILON_RATIOS


def add_grid_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha-grid", type=parse_float_list, help="Comma-separated alphas")
    parser.add_argument("--eps-grid", type=parse_float_list, help="Comma-separated epsilons")
    parser.add_argument(
        "--eps-relative",
        action="store_true",
        default=None,
        help="Read --eps-grid as ratios r with epsilon = r * alpha * (1 - alpha)",
    )


def build_grid(config: CliConfig) -> List[ModelParams]:
    """
    Cross the alpha and epsilon grids in the order given.

    Without either grid flag this is the default grid. A missing alpha grid
    uses the default alphas; a missing epsilon grid uses the default ratios.
    """
    if config.alpha_grid is None and config.eps_grid is None:
        return default_grid()

    alphas = config.alpha_grid or list(GRID_ALPHAS)
    if config.eps_grid is None:
        eps_values, relative = list(GRID_EPSILON_RATIOS), True
    else:
        eps_values, relative = config.eps_grid, config.eps_relative

    return [
        ModelParams(alpha=alpha, epsilon=eps * alpha * (1.0 - alpha) if relative else eps)
        for alpha in alphas
        for eps in eps_values
    ]
