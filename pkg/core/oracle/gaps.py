"""
Expected Switch Gaps

Enumerates the marginal l-chain (up-signal with probability pi(l), cascade
periods deterministic) level by level from a starting value until the
public likelihood takes the opposite sign. Paths that have switched are
absorbed with their exact time; the remaining mass is closed with the
bound M on the expected time to the next switch:

    value_low  = partial + mass * (depth + 1)
    value_high = partial + mass * (depth + M)

Frontier states are merged only when their l values are bitwise equal.
Path masses are carried as logarithms.
"""

import math
from typing import Dict, List, Optional, Tuple

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict

from core.config import settings
from core.model import (
    DerivedConstants,
    ModelParams,
    Region,
    cascade_decay,
    classify_region,
    derive_constants,
    f0,
    f1,
    signal_prob_up,
)

logger = structlog.get_logger()

TARGET_UNRESOLVED_MASS = 1e-3
MAX_DEPTH_FACTOR = 1000


class OracleResult(BaseModel):
    """Certified interval for E[D | l0]."""

    model_config = ConfigDict(frozen=True)

    l0: float
    value_low: float
    value_high: float
    depth: int
    mass_unresolved: float
    low_confidence: bool

    @property
    def width(self) -> float:
        return self.value_high - self.value_low

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.value_low - slack <= value <= self.value_high + slack


def default_depth(constants: DerivedConstants) -> int:
    return 10 * (constants.cap_K_floor + 2)


class GapEnumerator:
    """
    Level-by-level enumeration of the l-chain from ``l0`` until a sign switch.

    Starting values are mirrored onto the positive side, so results for l0
    and -l0 coincide exactly.
    """

    def __init__(
        self,
        l0: float,
        params: ModelParams,
        constants: Optional[DerivedConstants] = None,
    ):
        if not math.isfinite(l0) or l0 == 0:
            raise ValueError(f"l0 must be finite and nonzero, got {l0}")
        self.l0 = float(l0)
        self.params = params
        self.constants = constants or derive_constants(params)
        self.frontier: Dict[float, float] = {abs(self.l0): 0.0}
        self.depth = 0
        self.partial = 0.0

    @property
    def mass_unresolved(self) -> float:
        return float(sum(math.exp(m) for m in self.frontier.values()))

    def _children(self, l: float) -> List[Tuple[float, float]]:
        if classify_region(l, self.constants) is not Region.LEARNING:
            return [(cascade_decay(l, self.params), 0.0)]
        p_up = signal_prob_up(l, self.params)
        return [(f1(l, self.params), math.log(p_up)), (f0(l, self.params), math.log1p(-p_up))]

    def step(self) -> None:
        t = self.depth + 1
        frontier: Dict[float, float] = {}
        for l, log_mass in self.frontier.items():
            for child, log_p in self._children(l):
                branch = log_mass + log_p
                if child < 0:
                    self.partial += math.exp(branch) * t
                elif child in frontier:
                    frontier[child] = float(np.logaddexp(frontier[child], branch))
                else:
                    frontier[child] = branch
        self.frontier = frontier
        self.depth = t

    def advance(self, levels: int) -> None:
        for _ in range(levels):
            if not self.frontier:
                self.depth += levels
                return
            self.step()
            levels -= 1

    def result(self, low_confidence_mass: Optional[float] = None) -> OracleResult:
        threshold = (
            settings.low_confidence_mass if low_confidence_mass is None else low_confidence_mass
        )
        mass = self.mass_unresolved
        return OracleResult(
            l0=self.l0,
            value_low=self.partial + mass * (self.depth + 1),
            value_high=self.partial + mass * (self.depth + self.constants.fad_bound_M),
            depth=self.depth,
            mass_unresolved=mass,
            low_confidence=mass > threshold,
        )


def expected_gap_interval(
    l0: float,
    params: ModelParams,
    depth: Optional[int] = None,
) -> OracleResult:
    """
    Interval for the expected number of periods from ``l0`` to the next
    sign switch of the public likelihood.

    With ``depth`` omitted (and no settings override) the enumeration
    extends in steps of the default depth 10 * (floor(K) + 2) until the
    unresolved mass drops below 1e-3.
    At l0 = 0 the first move sets the reference sign and is counted.
    """
    if depth is None:
        depth = settings.oracle_depth
    if depth is not None and depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    constants = derive_constants(params)

    if l0 == 0:
        first = f1(0.0, params)
        inner = _enumerate(first, params, constants, None if depth is None else depth - 1)
        return OracleResult(
            l0=0.0,
            value_low=inner.value_low + 1,
            value_high=inner.value_high + 1,
            depth=inner.depth + 1,
            mass_unresolved=inner.mass_unresolved,
            low_confidence=inner.low_confidence,
        )
    return _enumerate(l0, params, constants, depth)


def _enumerate(
    l0: float,
    params: ModelParams,
    constants: DerivedConstants,
    depth: Optional[int],
) -> OracleResult:
    enumerator = GapEnumerator(l0, params, constants)
    if depth is not None:
        enumerator.advance(depth)
    else:
        chunk = default_depth(constants)
        limit = MAX_DEPTH_FACTOR * (constants.cap_K_floor + 2)
        enumerator.advance(chunk)
        while enumerator.mass_unresolved >= TARGET_UNRESOLVED_MASS and enumerator.depth < limit:
            enumerator.advance(chunk)
        if enumerator.mass_unresolved >= TARGET_UNRESOLVED_MASS:
            logger.warning(
                "Unresolved mass above target",
                l0=l0,
                depth=enumerator.depth,
                mass=enumerator.mass_unresolved,
            )

    result = enumerator.result()
    if result.low_confidence:
        logger.warning(
            "Low-confidence gap interval",
            l0=l0,
            depth=result.depth,
            mass=result.mass_unresolved,
        )
    return result


def post_switch_values(params: ModelParams, periods: Optional[int] = None) -> List[float]:
    """
    Magnitudes of every value the public likelihood can take right after a
    sign switch, over paths of ``periods`` periods starting from l_1 = 0.
    """
    periods = settings.post_switch_horizon if periods is None else periods
    constants = derive_constants(params)
    frontier = {(0.0, 0)}
    values = set()

    for _ in range(periods - 1):
        advanced = set()
        for l, reference in frontier:
            if classify_region(l, constants) is Region.LEARNING:
                children = (f1(l, params), f0(l, params))
            else:
                children = (cascade_decay(l, params),)
            for child in children:
                sign = (child > 0) - (child < 0)
                if reference == 0:
                    advanced.add((child, sign))
                elif sign == -reference:
                    values.add(abs(child))
                    advanced.add((child, sign))
                else:
                    advanced.add((child, reference))
        frontier = advanced

    return sorted(values)
