"""Analytics module exports."""

from core.analytics.report import (
    FadReport,
    SeedSummary,
    aggregate,
    fad_report,
    POINT_COLUMNS,
    SUMMARY_COLUMNS,
    points_to_frame,
    read_report,
    report_to_frame,
    summarize_trace,
    write_report,
)
from core.analytics.statistics import (
    CascadeEpisode,
    ChangeFrequencies,
    MomentStability,
    SwitchStats,
    cascade_episodes,
    cascade_length_histogram,
    change_frequencies,
    count_changes,
    max_cascade_length,
    moment_stability,
    require_gaps,
    restricted_fad_count,
    sign_switch_times,
    switch_gaps,
)

__all__ = [
    "CascadeEpisode",
    "ChangeFrequencies",
    "FadReport",
    "POINT_COLUMNS",
    "SUMMARY_COLUMNS",
    "MomentStability",
    "SeedSummary",
    "SwitchStats",
    "aggregate",
    "cascade_episodes",
    "cascade_length_histogram",
    "change_frequencies",
    "count_changes",
    "fad_report",
    "max_cascade_length",
    "moment_stability",
    "points_to_frame",
    "read_report",
    "report_to_frame",
    "require_gaps",
    "restricted_fad_count",
    "sign_switch_times",
    "summarize_trace",
    "switch_gaps",
    "write_report",
]
