"""
Bound Verification

Checks, for each (alpha, epsilon) on a grid, that the switch-gap bound
satisfies 1 < M < 1/epsilon, that cascades started at the supremum of the
public likelihood last at most floor(K) periods, and that the certified
interval for the expected gap stays below M from every post-switch value.
"""

from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd
import structlog
from pydantic import BaseModel, ConfigDict

from core.errors import VerificationError
from core.model import ModelParams, cascade_decay, derive_constants
from core.oracle.gaps import expected_gap_interval, post_switch_values

logger = structlog.get_logger()

GRID_ALPHAS = (0.55, 0.6, 0.7, 0.8, 0.9, 0.95)
GRID_EPSILON_RATIOS = (0.5, 0.1, 0.01, 0.001)

TABLE_COLUMNS = [
    "alpha",
    "epsilon",
    "K",
    "M",
    "inv_eps",
    "max_cascade_len",
    "interval_low",
    "interval_high",
    "pass",
]

GridPoint = Union[ModelParams, Tuple[float, float]]


class BoundsRow(BaseModel):
    """Outcome of every check at one grid point."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    epsilon: float
    K: float
    cap_K_floor: int
    M: float
    inv_eps: float
    max_cascade_len: int
    belief_cascade_len: int
    interval_low: float
    interval_high: float
    worst_l0: float
    mass_unresolved: float
    starting_values: int
    passed: bool
    failures: List[str] = []


class BoundsTable(BaseModel):
    rows: List[BoundsRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def failures(self) -> List[BoundsRow]:
        return [row for row in self.rows if not row.passed]

    def to_frame(self, full: bool = False) -> pd.DataFrame:
        frame = pd.DataFrame([row.model_dump() for row in self.rows])
        frame = frame.rename(columns={"passed": "pass"})
        if full:
            frame["failures"] = frame["failures"].map(";".join)
            return frame
        return frame[TABLE_COLUMNS]

    def write_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False, float_format="%.17g")
        return path

    def raise_for_failures(self) -> None:
        failed = self.failures()
        if failed:
            raise VerificationError(
                f"{len(failed)} grid point(s) failed bound verification",
                failures=[
                    {"alpha": row.alpha, "epsilon": row.epsilon, "failures": row.failures}
                    for row in failed
                ],
            )


def default_grid() -> List[ModelParams]:
    """Alphas crossed with epsilon = r * alpha * (1 - alpha) for each ratio r."""
    return [
        ModelParams(alpha=alpha, epsilon=ratio * alpha * (1.0 - alpha))
        for alpha in GRID_ALPHAS
        for ratio in GRID_EPSILON_RATIOS
    ]


def _as_params(point: GridPoint) -> ModelParams:
    if isinstance(point, ModelParams):
        return point
    alpha, epsilon = point
    return ModelParams(alpha=alpha, epsilon=epsilon)


def cascade_length_from_sup(params: ModelParams) -> int:
    """Periods the likelihood stays at or above c_alpha when started at f1(c_alpha)."""
    constants = derive_constants(params)
    l, periods = constants.l_sup, 0
    while l >= constants.c_alpha:
        periods += 1
        l = cascade_decay(l, params)
    return periods


def belief_cascade_length(params: ModelParams) -> int:
    """The same count on beliefs, where a cascade period maps q to (1-2e)q + e."""
    alpha, epsilon = params.alpha, params.epsilon
    q, periods = derive_constants(params).belief_sup, 0
    while q >= alpha:
        periods += 1
        q = (1.0 - 2.0 * epsilon) * q + epsilon
    return periods


def check_point(
    params: ModelParams,
    depth: Optional[int] = None,
    periods: Optional[int] = None,
) -> BoundsRow:
    constants = derive_constants(params)
    bound_m = constants.fad_bound_M
    inv_eps = constants.expected_state_gap
    failures: List[str] = []

    if not 1.0 < bound_m < inv_eps:
        failures.append(f"M={bound_m:.6g} outside (1, 1/epsilon={inv_eps:.6g})")

    cascade_len = cascade_length_from_sup(params)
    belief_len = belief_cascade_length(params)
    if cascade_len > constants.cap_K_floor:
        failures.append(f"cascade length {cascade_len} > floor(K)={constants.cap_K_floor}")
    if belief_len > constants.cap_K_floor:
        failures.append(f"belief cascade length {belief_len} > floor(K)={constants.cap_K_floor}")

    values = post_switch_values(params, periods)
    worst = None
    for l0 in values:
        result = expected_gap_interval(l0, params, depth)
        if result.value_high >= bound_m:
            failures.append(f"interval high {result.value_high:.6g} >= M at l0={l0:.6g}")
        if worst is None or result.value_high > worst.value_high:
            worst = result
    if worst is None:
        failures.append("no post-switch values reached")

    row = BoundsRow(
        alpha=params.alpha,
        epsilon=params.epsilon,
        K=constants.cap_K,
        cap_K_floor=constants.cap_K_floor,
        M=bound_m,
        inv_eps=inv_eps,
        max_cascade_len=cascade_len,
        belief_cascade_len=belief_len,
        interval_low=worst.value_low if worst else float("nan"),
        interval_high=worst.value_high if worst else float("nan"),
        worst_l0=worst.l0 if worst else float("nan"),
        mass_unresolved=worst.mass_unresolved if worst else float("nan"),
        starting_values=len(values),
        passed=not failures,
        failures=failures,
    )
    logger.info(
        "Checked grid point",
        alpha=params.alpha,
        epsilon=params.epsilon,
        M=bound_m,
        interval_high=row.interval_high,
        passed=row.passed,
    )
    return row


def verify_bounds(
    grid: Optional[Iterable[GridPoint]] = None,
    depth: Optional[int] = None,
    periods: Optional[int] = None,
) -> BoundsTable:
    """
    Run every bound check over ``grid`` (the default grid when omitted).

    All points are validated before any check runs, so an inadmissible
    point raises a validation error rather than producing a failed row.
    """
    points: Sequence[ModelParams] = (
        default_grid() if grid is None else [_as_params(point) for point in grid]
    )
    for params in points:
        derive_constants(params)

    table = BoundsTable(rows=[check_point(params, depth, periods) for params in points])
    logger.info(
        "Bound verification finished",
        points=len(table.rows),
        failed=len(table.failures()),
    )
    return table
