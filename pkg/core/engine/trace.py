"""
Run Configuration and Traces

A Trace keeps one column per recorded quantity (numpy arrays, read-only)
rather than a list of per-period objects; TraceStep views are built on
demand. Memory is O(N): about 27 bytes per period, so a 10^7-period run
needs roughly 270 MB.
"""

from dataclasses import dataclass
from typing import Iterator, Literal, Optional

import numpy as np
import pandas as pd
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.config import settings
from core.engine.rng import RNG_NAME, RNG_VERSION, check_seed
from core.model import Action, ModelParams, Region, Signal, StateValue

TRACE_COLUMNS = ["t", "theta", "signal", "l_pub", "L_post", "action", "region"]


class RunConfig(BaseModel):
    """Everything that determines a sample path."""

    model_config = ConfigDict(frozen=True)

    params: ModelParams
    horizon: int = Field(description="Number of periods N")
    seed: int = Field(default=0, description="Integer seed in [0, 2**64)")
    initial_state_distribution: Literal["uniform"] = "uniform"

    @field_validator("horizon")
    @classmethod
    def check_horizon(cls, v: int) -> int:
        if v < 2:
            raise ValueError(f"horizon must be >= 2, got {v}")
        if v > settings.max_horizon:
            raise ValueError(f"horizon must be <= {settings.max_horizon}, got {v}")
        return v

    @field_validator("seed")
    @classmethod
    def check_seed_range(cls, v: int) -> int:
        return check_seed(v)


class TraceStep(BaseModel):
    """One period's full record."""

    model_config = ConfigDict(frozen=True)

    t: int
    theta: Optional[StateValue]
    signal: Signal
    l_pub: float
    L_post: float
    action: Action
    region: Region


def _frozen(values: NDArray) -> NDArray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True)
class Trace:
    """
    A simulated path of N periods.

    ``theta`` is None for marginal l-chain paths. ``l_final`` is the public
    likelihood entering period N+1, so a_N = sign(l_final).
    """

    config: RunConfig
    theta: Optional[NDArray[np.int8]]
    signal: NDArray[np.int8]
    l_pub: NDArray[np.float64]
    L_post: NDArray[np.float64]
    action: NDArray[np.int8]
    region: NDArray[np.int8]
    l_final: float
    rng_name: str = RNG_NAME
    rng_version: int = RNG_VERSION

    def __post_init__(self) -> None:
        n = len(self.l_pub)
        columns = [self.signal, self.L_post, self.action, self.region]
        if self.theta is not None:
            columns.append(self.theta)
        if any(len(c) != n for c in columns):
            raise ValueError("Trace columns must share one length")
        for column in columns + [self.l_pub]:
            _frozen(column)

    def __len__(self) -> int:
        return len(self.l_pub)

    @property
    def params(self) -> ModelParams:
        return self.config.params

    @property
    def is_marginal(self) -> bool:
        return self.theta is None

    @property
    def public_path(self) -> NDArray[np.float64]:
        """l_1 .. l_{N+1}."""
        return np.append(self.l_pub, self.l_final)

    def step(self, index: int) -> TraceStep:
        """Record of period ``index + 1``."""
        return TraceStep(
            t=index + 1,
            theta=None if self.theta is None else StateValue(int(self.theta[index])),
            signal=Signal(int(self.signal[index])),
            l_pub=float(self.l_pub[index]),
            L_post=float(self.L_post[index]),
            action=Action(int(self.action[index])),
            region=Region(int(self.region[index])),
        )

    def steps(self) -> Iterator[TraceStep]:
        for i in range(len(self)):
            yield self.step(i)

    def to_frame(self) -> pd.DataFrame:
        """Columns t, theta, signal, l_pub, L_post, action, region (labels)."""
        labels = np.array([r.label for r in Region])
        frame = pd.DataFrame(
            {
                "t": np.arange(1, len(self) + 1, dtype=np.int64),
                "theta": self.theta if self.theta is not None else pd.NA,
                "signal": self.signal,
                "l_pub": self.l_pub,
                "L_post": self.L_post,
                "action": self.action,
                "region": labels[self.region.astype(np.int64) + 1],
            }
        )
        return frame[TRACE_COLUMNS]
