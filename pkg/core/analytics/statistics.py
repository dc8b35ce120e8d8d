"""
Path Statistics

Change frequencies of actions and states, sign switches of the public
likelihood with the gaps between them, restricted fads, cascade episodes
and a moment-stability diagnostic for the gaps.
"""

from collections import Counter
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
import structlog
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field
from scipy import stats

from core.engine import Trace
from core.errors import InsufficientSwitchesError, TraceTooShortError
from core.model import Region, derive_constants

logger = structlog.get_logger()

RestrictedMode = Literal["no_preceding_switch", "consecutive_pair"]


# =============================================================================
# Result Models
# =============================================================================

class ChangeFrequencies(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    action_changes: int
    state_changes: Optional[int]
    q_a: float
    q_theta: Optional[float]


class SwitchStats(BaseModel):
    """Sign switches of l and the gaps D_i = T_i - T_{i-1} (T_0 = 0)."""

    model_config = ConfigDict(frozen=True)

    action_changes: int
    state_changes: Optional[int]
    q_a: float
    q_theta: Optional[float]
    switch_times: List[int]
    gaps: List[int]
    zero_hits: int = 0
    sufficient: bool = Field(description="At least two sign switches were observed")

    @property
    def fresh_gaps(self) -> List[int]:
        """Gaps D_i for i >= 2, each starting from a value that just switched sign."""
        return self.gaps[1:]


class CascadeEpisode(BaseModel):
    """A maximal run of cascade-region periods."""

    model_config = ConfigDict(frozen=True)

    enter_t: int
    enter_l: float
    length: int
    exit_l: Optional[float] = Field(description="None when the path ends inside the cascade")
    direction: Region

    @property
    def censored(self) -> bool:
        return self.exit_l is None


class MomentStability(BaseModel):
    """Per-block moments; slopes are per block index."""

    model_config = ConfigDict(frozen=True)

    block_ends: List[int]
    moments: Dict[int, List[float]]
    slopes: Dict[int, float]
    p_values: Dict[int, float]
    level: float
    stable: bool


# =============================================================================
# Change Counting
# =============================================================================

def count_changes(labels: ArrayLike) -> int:
    """Number of t with x_t != x_{t+1}."""
    values = np.asarray(labels)
    return int(np.count_nonzero(values[1:] != values[:-1]))


def change_frequencies(trace: Trace) -> ChangeFrequencies:
    """Q_a(n) and Q_theta(n) with n = N - 1."""
    if len(trace) < 2:
        raise TraceTooShortError(f"change frequencies need >= 2 periods, got {len(trace)}")
    n = len(trace) - 1
    action_changes = count_changes(trace.action)
    state_changes = None if trace.theta is None else count_changes(trace.theta)
    return ChangeFrequencies(
        n=n,
        action_changes=action_changes,
        state_changes=state_changes,
        q_a=action_changes / n,
        q_theta=None if state_changes is None else state_changes / n,
    )


# =============================================================================
# Sign Switches
# =============================================================================

def sign_switch_times(values: ArrayLike) -> Tuple[NDArray[np.int64], int]:
    """
    1-indexed periods at which the sign of ``values`` flips.

    A zero inherits the previous sign; leading zeros carry no sign. Returns
    the switch times and the number of zeros met after the first sign.
    """
    signs = np.sign(np.asarray(values, dtype=np.float64)).astype(np.int8)
    positions = np.where(signs != 0, np.arange(len(signs)), 0)
    filled = signs[np.maximum.accumulate(positions)] if len(signs) else signs

    nonzero = np.flatnonzero(signs)
    zero_hits = 0 if not len(nonzero) else int(np.count_nonzero(signs[nonzero[0]:] == 0))

    flips = (filled[1:] != 0) & (filled[:-1] != 0) & (filled[1:] != filled[:-1])
    return np.flatnonzero(flips).astype(np.int64) + 2, zero_hits


def switch_gaps(trace: Trace) -> SwitchStats:
    """Switch times over l_1 .. l_{N+1} and the gaps between them."""
    freqs = change_frequencies(trace)
    times, zero_hits = sign_switch_times(trace.public_path)
    if zero_hits:
        logger.warning("Public likelihood hit zero", hits=zero_hits, seed=trace.config.seed)

    sufficient = len(times) >= 2
    gaps = np.diff(times, prepend=0).tolist() if sufficient else []
    return SwitchStats(
        action_changes=freqs.action_changes,
        state_changes=freqs.state_changes,
        q_a=freqs.q_a,
        q_theta=freqs.q_theta,
        switch_times=times.tolist(),
        gaps=gaps,
        zero_hits=zero_hits,
        sufficient=sufficient,
    )


def require_gaps(stats_: SwitchStats) -> List[int]:
    if not stats_.sufficient:
        raise InsufficientSwitchesError(
            f"need >= 2 sign switches, got {len(stats_.switch_times)}"
        )
    return stats_.gaps


# =============================================================================
# Restricted Fads
# =============================================================================

def restricted_fad_count(trace: Trace, mode: RestrictedMode = "no_preceding_switch") -> int:
    """
    Action changes at t that are not the second of two back-to-back changes.

    ``no_preceding_switch`` counts a_t != a_{t-1} with a_{t-1} = a_{t-2};
    ``consecutive_pair`` counts the complementary pattern a_t != a_{t-1},
    a_{t-1} != a_{t-2}.
    """
    actions = trace.action
    if len(actions) < 3:
        raise TraceTooShortError(f"restricted fads need >= 3 periods, got {len(actions)}")
    changed = actions[2:] != actions[1:-1]
    previous_held = actions[1:-1] == actions[:-2]
    if mode == "no_preceding_switch":
        return int(np.count_nonzero(changed & previous_held))
    if mode == "consecutive_pair":
        return int(np.count_nonzero(changed & ~previous_held))
    raise ValueError(f"Unknown restricted-fad mode: {mode}")


# =============================================================================
# Cascade Episodes
# =============================================================================

def cascade_episodes(trace: Trace) -> List[CascadeEpisode]:
    """Maximal runs of UpCascade or DownCascade periods with entry and exit values."""
    region = trace.region.astype(np.int64)
    n = len(region)
    if n == 0:
        return []

    starts = np.flatnonzero(np.diff(region, prepend=region[0] - 1) != 0)
    ends = np.append(starts[1:], n)
    l_pub = trace.l_pub
    c_alpha = derive_constants(trace.params).c_alpha

    episodes: List[CascadeEpisode] = []
    for start, end in zip(starts, ends):
        code = int(region[start])
        if code == 0:
            continue
        if end < n:
            exit_l: Optional[float] = float(l_pub[end])
        else:
            exit_l = trace.l_final if abs(trace.l_final) < c_alpha else None
        episodes.append(
            CascadeEpisode(
                enter_t=int(start) + 1,
                enter_l=float(l_pub[start]),
                length=int(end - start),
                exit_l=exit_l,
                direction=Region(code),
            )
        )
    return episodes


def cascade_length_histogram(episodes: List[CascadeEpisode]) -> Dict[int, int]:
    return dict(sorted(Counter(e.length for e in episodes).items()))


def max_cascade_length(trace: Trace) -> int:
    return max((e.length for e in cascade_episodes(trace)), default=0)


# =============================================================================
# Moment Stability
# =============================================================================

def moment_stability(
    gaps: ArrayLike,
    max_order: int = 4,
    n_blocks: int = 10,
    level: float = 0.05,
) -> MomentStability:
    """
    Raw moments 1..max_order of the gaps over disjoint consecutive blocks,
    with a one-sided least-squares test that no moment trends upward.

    Blocks share no gaps, so the regression points are independent. The
    verdict holds ``level`` across all orders (each order is tested at
    ``level / max_order``).
    """
    values = np.asarray(gaps, dtype=np.float64)
    if len(values) < 2 * n_blocks:
        raise InsufficientSwitchesError(
            f"moment stability needs >= {2 * n_blocks} gaps, got {len(values)}"
        )

    blocks = np.array_split(values, n_blocks)
    block_ends = np.cumsum([len(b) for b in blocks]).astype(np.int64)
    per_order = level / max_order
    moments: Dict[int, List[float]] = {}
    slopes: Dict[int, float] = {}
    p_values: Dict[int, float] = {}
    stable = True

    for order in range(1, max_order + 1):
        series = [float(np.mean(block**order)) for block in blocks]
        fit = stats.linregress(np.arange(n_blocks), series)
        slope = float(fit.slope)
        p_two = float(fit.pvalue) if np.isfinite(fit.pvalue) else 1.0
        p_upward = p_two / 2 if slope > 0 else 1.0 - p_two / 2

        moments[order] = series
        slopes[order] = slope
        p_values[order] = p_upward
        if slope > 0 and p_upward < per_order:
            stable = False

    return MomentStability(
        block_ends=block_ends.tolist(),
        moments=moments,
        slopes=slopes,
        p_values=p_values,
        level=level,
        stable=stable,
    )
