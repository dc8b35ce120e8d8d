"""
Sweep Command

Runs every (grid point, seed) job on a bounded process pool and writes
one pooled row per grid point. Output order follows the grid, then the
seed list, whatever order the jobs finish in.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Dict, List, Tuple

from cli.base import BaseCommand, ExitCode
from cli.commands.grid import add_grid_arguments, build_grid
from cli.commands.simulate import add_restricted_mode
from cli.config import CliConfig
from core.analytics import FadReport, SeedSummary, aggregate, summarize_trace, write_report
from core.analytics.statistics import RestrictedMode
from core.engine import RunConfig, simulate
from core.model import ModelParams


def run_job(
    params: ModelParams,
    horizon: int,
    seed: int,
    restricted_mode: RestrictedMode,
) -> SeedSummary:
    trace = simulate(RunConfig(params=params, horizon=horizon, seed=seed))
    return summarize_trace(trace, restricted_mode)


class SweepCommand(BaseCommand):
    NAME = "sweep"
    HELP = "Run a parameter grid and report fad statistics per point"

    @classmethod
    def register_arguments(cls, parser: argparse.ArgumentParser) -> None:
        add_grid_arguments(parser)
        add_restricted_mode(parser)
        parser.add_argument("--workers", type=int, help="Worker processes")

    def execute(self, config: CliConfig) -> ExitCode:
        grid = build_grid(config)
        for params in grid:
            RunConfig(params=params, horizon=config.horizon)

        jobs = [
            (index, seed, params)
            for index, params in enumerate(grid)
            for seed in config.seeds
        ]
        self.logger.info(
            "Sweep started",
            points=len(grid),
            seeds=len(config.seeds),
            workers=config.workers,
        )
        results = self._run_jobs(jobs, config)

        reports: List[FadReport] = []
        for index, params in enumerate(grid):
            summaries = [results[(index, seed)] for seed in config.seeds]
            reports.append(aggregate(params, config.horizon, summaries, config.restricted_mode))

        path = write_report(reports, config.output_path("sweep"), config.format, rows="point")
        self.record_output(path)

        for report in reports:
            ratio = "nan" if report.ratio is None else f"{report.ratio:.4f}"
            self.emit(
                f"alpha={report.alpha:g} eps={report.epsilon:g} {report.summary_line()} "
                f"ratio={ratio}"
            )
        return ExitCode.OK

    def _run_jobs(
        self,
        jobs: List[Tuple[int, int, ModelParams]],
        config: CliConfig,
    ) -> Dict[Tuple[int, int], SeedSummary]:
        results: Dict[Tuple[int, int], SeedSummary] = {}
        if config.workers == 1:
            for index, seed, params in jobs:
                results[(index, seed)] = run_job(
                    params, config.horizon, seed, config.restricted_mode
                )
            return results

        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = {
                pool.submit(run_job, params, config.horizon, seed, config.restricted_mode): (
                    index,
                    seed,
                )
                for index, seed, params in jobs
            }
            for future in as_completed(futures):
                index, seed = futures[future]
                results[(index, seed)] = future.result()
                self.logger.debug("Sweep job complete", point=index, seed=seed)
        return results
