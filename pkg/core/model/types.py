"""
Model Types

Parameters, binary labels and regions of the sequential social-learning
model with a changing binary state.
"""

import math
from enum import IntEnum
from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from scipy.special import expit, logit

# Log-likelihood ratios travel as plain floats (or float arrays).
Likelihood = float
LikelihoodLike = Union[float, ArrayLike]


# =============================================================================
# Binary Labels
# =============================================================================

class BinaryLabel(IntEnum):
    """A label in {-1, +1}; negation flips it and stays in the same type."""

    def __neg__(self) -> "BinaryLabel":
        return type(self)(-int(self))


class StateValue(BinaryLabel):
    DOWN = -1
    UP = 1


class Signal(BinaryLabel):
    DOWN = -1
    UP = 1


class Action(BinaryLabel):
    DOWN = -1
    UP = 1


class Region(IntEnum):
    """Where the public likelihood sits relative to +/- c_alpha."""

    DOWN_CASCADE = -1
    LEARNING = 0
    UP_CASCADE = 1

    @property
    def label(self) -> str:
        return _REGION_LABELS[self]

    @property
    def is_cascade(self) -> bool:
        return self is not Region.LEARNING

    @classmethod
    def from_label(cls, label: str) -> "Region":
        for region, name in _REGION_LABELS.items():
            if name == label:
                return region
        raise ValueError(f"Unknown region label: {label}")


_REGION_LABELS = {
    Region.DOWN_CASCADE: "DownCascade",
    Region.LEARNING: "Learning",
    Region.UP_CASCADE: "UpCascade",
}


# =============================================================================
# Parameters
# =============================================================================

class ModelParams(BaseModel):
    """Signal precision alpha and per-period state-switch probability epsilon."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    epsilon: float

    @field_validator("alpha")
    @classmethod
    def check_alpha(cls, v: float) -> float:
        if not (math.isfinite(v) and 0.5 < v < 1.0):
            raise ValueError(f"alpha must satisfy 1/2 < alpha < 1, got {v}")
        return v

    @model_validator(mode="after")
    def check_epsilon(self) -> "ModelParams":
        upper = self.alpha * (1.0 - self.alpha)
        if not (math.isfinite(self.epsilon) and 0.0 < self.epsilon < upper):
            raise ValueError(
                f"epsilon must satisfy 0 < epsilon < alpha*(1-alpha) = {upper:.6g}, "
                f"got {self.epsilon}"
            )
        return self


class DerivedConstants(BaseModel):
    """Closed-form thresholds and bounds implied by (alpha, epsilon)."""

    model_config = ConfigDict(frozen=True)

    c_alpha: float
    c_u: float
    cap_K: float
    cap_K_floor: int
    fad_bound_M: float
    l_sup: float
    belief_sup: float
    expected_state_gap: float


# =============================================================================
# Belief Views
# =============================================================================

def to_belief(l: LikelihoodLike) -> Union[float, NDArray[np.float64]]:
    """Belief e^l / (1 + e^l) assigned to the up state."""
    return expit(l)


def from_belief(q: Union[float, ArrayLike]) -> Union[float, NDArray[np.float64]]:
    """Log-odds of a belief in (0, 1)."""
    return logit(q)
