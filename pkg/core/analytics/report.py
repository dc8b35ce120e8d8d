"""
Fad Report

Aggregates per-seed statistics into one report per parameter point.
Pooled values are unweighted averages of per-seed values; gaps within a
seed are dependent, so seeds are the unit of replication.
"""

import json
from pathlib import Path
from typing import Iterable, List, Literal, Optional, Sequence, Union

import numpy as np
import pandas as pd
import structlog
from pydantic import BaseModel, ConfigDict, Field

from core.analytics.statistics import (
    RestrictedMode,
    cascade_episodes,
    restricted_fad_count,
    switch_gaps,
)
from core.engine import RNG_NAME, RNG_VERSION, Trace
from core.errors import MixedParametersError
from core.model import ModelParams, derive_constants

logger = structlog.get_logger()


class SeedSummary(BaseModel):
    """Statistics of one simulated path."""

    model_config = ConfigDict(frozen=True)

    seed: int
    action_changes: int
    state_changes: int
    q_a: float
    q_theta: float
    margin: float
    fads_emerged: bool
    mean_gap: Optional[float] = Field(description="Mean of D_i for i >= 2")
    gap_count: int
    restricted_fad_count: int
    max_cascade_length: int
    zero_hits: int


class FadReport(BaseModel):
    """Fad statistics for one (alpha, epsilon, horizon) over one or more seeds."""

    alpha: float
    epsilon: float
    horizon: int
    seeds: List[int]

    q_a: float
    q_theta: float
    fads_emerged: bool
    margin: float
    ratio: Optional[float] = Field(description="Q_a / Q_theta; None when no state change")
    mean_gap: Optional[float]
    restricted_fad_count: int = Field(description="Total over seeds")
    restricted_fad_mean: float
    restricted_mode: RestrictedMode
    action_changes_mean: float
    state_changes_mean: float
    all_seeds_fads: bool
    max_cascade_length: int
    zero_hits: int

    cap_K_floor: int
    fad_bound_M: float
    inv_epsilon: float
    action_changes_lower_bound: float = Field(description="(N - 1) / M")

    rng_name: str = RNG_NAME
    rng_version: int = RNG_VERSION
    per_seed: List[SeedSummary]

    def summary_line(self) -> str:
        fads = "true" if self.fads_emerged else "false"
        return f"Q_a={self.q_a:.6f} Q_theta={self.q_theta:.6f} fads={fads}"


# =============================================================================
# Building Reports
# =============================================================================

def summarize_trace(
    trace: Trace,
    restricted_mode: RestrictedMode = "no_preceding_switch",
) -> SeedSummary:
    """Reduce a full-model trace to its per-seed statistics."""
    if trace.is_marginal:
        raise ValueError("Fad statistics need the state path; got a marginal l-chain trace")

    switches = switch_gaps(trace)
    fresh = switches.fresh_gaps
    episodes = cascade_episodes(trace)
    q_theta = float(switches.q_theta)
    return SeedSummary(
        seed=trace.config.seed,
        action_changes=switches.action_changes,
        state_changes=int(switches.state_changes),
        q_a=switches.q_a,
        q_theta=q_theta,
        margin=switches.q_a - q_theta,
        fads_emerged=switches.q_a > q_theta,
        mean_gap=float(np.mean(fresh)) if fresh else None,
        gap_count=len(fresh),
        restricted_fad_count=restricted_fad_count(trace, restricted_mode),
        max_cascade_length=max((e.length for e in episodes), default=0),
        zero_hits=switches.zero_hits,
    )


def aggregate(
    params: ModelParams,
    horizon: int,
    summaries: Sequence[SeedSummary],
    restricted_mode: RestrictedMode = "no_preceding_switch",
) -> FadReport:
    """Pool per-seed summaries into a report."""
    if not summaries:
        raise ValueError("At least one seed summary is required")
    constants = derive_constants(params)

    q_a = float(np.mean([s.q_a for s in summaries]))
    q_theta = float(np.mean([s.q_theta for s in summaries]))
    gaps = [s.mean_gap for s in summaries if s.mean_gap is not None]
    restricted = [s.restricted_fad_count for s in summaries]

    report = FadReport(
        alpha=params.alpha,
        epsilon=params.epsilon,
        horizon=horizon,
        seeds=[s.seed for s in summaries],
        q_a=q_a,
        q_theta=q_theta,
        fads_emerged=q_a - q_theta > 0,
        margin=q_a - q_theta,
        ratio=q_a / q_theta if q_theta > 0 else None,
        mean_gap=float(np.mean(gaps)) if gaps else None,
        restricted_fad_count=int(sum(restricted)),
        restricted_fad_mean=float(np.mean(restricted)),
        restricted_mode=restricted_mode,
        action_changes_mean=float(np.mean([s.action_changes for s in summaries])),
        state_changes_mean=float(np.mean([s.state_changes for s in summaries])),
        all_seeds_fads=all(s.fads_emerged for s in summaries),
        max_cascade_length=max(s.max_cascade_length for s in summaries),
        zero_hits=sum(s.zero_hits for s in summaries),
        cap_K_floor=constants.cap_K_floor,
        fad_bound_M=constants.fad_bound_M,
        inv_epsilon=constants.expected_state_gap,
        action_changes_lower_bound=(horizon - 1) / constants.fad_bound_M,
        per_seed=list(summaries),
    )
    logger.info(
        "Fad report built",
        alpha=params.alpha,
        epsilon=params.epsilon,
        seeds=len(summaries),
        q_a=report.q_a,
        q_theta=report.q_theta,
        fads=report.fads_emerged,
    )
    return report


def fad_report(
    traces: Iterable[Trace],
    restricted_mode: RestrictedMode = "no_preceding_switch",
) -> FadReport:
    """Report over traces that share parameters and horizon."""
    traces = list(traces)
    if not traces:
        raise ValueError("fad_report needs at least one trace")

    params = traces[0].params
    horizon = len(traces[0])
    for trace in traces[1:]:
        if trace.params != params or len(trace) != horizon:
            raise MixedParametersError(
                f"traces mix parameters: {params} / N={horizon} vs "
                f"{trace.params} / N={len(trace)}"
            )

    summaries = [summarize_trace(trace, restricted_mode) for trace in traces]
    return aggregate(params, horizon, summaries, restricted_mode)


# =============================================================================
# Serialization
# =============================================================================

SUMMARY_COLUMNS = [
    "alpha",
    "epsilon",
    "horizon",
    "seed",
    "action_changes",
    "state_changes",
    "q_a",
    "q_theta",
    "margin",
    "fads_emerged",
    "mean_gap",
    "gap_count",
    "restricted_fad_count",
    "max_cascade_length",
    "zero_hits",
]


POINT_COLUMNS = [
    "alpha",
    "epsilon",
    "horizon",
    "seeds",
    "q_a",
    "q_theta",
    "ratio",
    "margin",
    "fads_emerged",
    "all_seeds_fads",
    "mean_gap",
    "restricted_fad_count",
    "restricted_fad_mean",
    "action_changes_mean",
    "state_changes_mean",
    "max_cascade_length",
    "zero_hits",
    "cap_K_floor",
    "fad_bound_M",
    "inv_epsilon",
    "action_changes_lower_bound",
]

RowLayout = Literal["seed", "point"]


def points_to_frame(reports: Sequence[FadReport]) -> pd.DataFrame:
    """One CSV row per parameter point, pooled over seeds."""
    rows = [{**r.model_dump(exclude={"per_seed"}), "seeds": len(r.seeds)} for r in reports]
    return pd.DataFrame(rows, columns=POINT_COLUMNS)


def report_to_frame(reports: Sequence[FadReport]) -> pd.DataFrame:
    """One CSV summary row per (params, seed)."""
    rows = [
        {"alpha": r.alpha, "epsilon": r.epsilon, "horizon": r.horizon, **s.model_dump()}
        for r in reports
        for s in r.per_seed
    ]
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def write_report(
    report: Union[FadReport, Sequence[FadReport]],
    path: Union[str, Path],
    fmt: Literal["csv", "json"] = "json",
    rows: RowLayout = "seed",
) -> Path:
    """
    Write one report (or a list of them) as JSON, or as CSV with one row per
    seed or one row per parameter point.
    """
    reports = [report] if isinstance(report, FadReport) else list(report)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    if fmt == "json":
        payload = [r.model_dump(mode="json") for r in reports]
        path.write_text(
            json.dumps(payload[0] if isinstance(report, FadReport) else payload, indent=2),
            encoding="utf-8",
        )
    elif fmt == "csv":
        frame = points_to_frame(reports) if rows == "point" else report_to_frame(reports)
        frame.to_csv(path, index=False, float_format="%.17g")
    else:
        raise ValueError(f"Unknown report format: {fmt}")

    logger.info("Report written", path=str(path), format=fmt, reports=len(reports))
    return path


def read_report(path: Union[str, Path]) -> FadReport:
    return FadReport.model_validate_json(Path(path).read_text(encoding="utf-8"))
