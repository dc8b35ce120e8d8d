"""Shared fixtures: parameter points and a factory for hand-built traces."""

from typing import Optional, Sequence

import numpy as np
import pytest

from core.engine import RunConfig, Trace
from core.model import ModelParams, derive_constants


@pytest.fixture
def params() -> ModelParams:
    return ModelParams(alpha=0.8, epsilon=0.05)


@pytest.fixture
def params_low_eps() -> ModelParams:
    return ModelParams(alpha=0.8, epsilon=0.01)


@pytest.fixture
def grid_params() -> list:
    return [
        ModelParams(alpha=alpha, epsilon=ratio * alpha * (1 - alpha))
        for alpha in (0.55, 0.6, 0.7, 0.8, 0.9, 0.95)
        for ratio in (0.5, 0.1, 0.01, 0.001)
    ]


def build_trace(
    actions: Sequence[int],
    theta: Optional[Sequence[int]] = None,
    l_pub: Optional[Sequence[float]] = None,
    l_final: Optional[float] = None,
    params: Optional[ModelParams] = None,
) -> Trace:
    """
    A Trace from explicit columns. Signals follow the actions; l defaults
    to +/-0.5 by action, lagged one period, so a_t = sign(l_{t+1}).
    """
    params = params or ModelParams(alpha=0.8, epsilon=0.05)
    c_alpha = derive_constants(params).c_alpha
    action = np.asarray(actions, dtype=np.int8)
    n = len(action)

    if l_pub is None:
        lagged = np.concatenate([[0.0], 0.5 * action[:-1]])
        l_values = lagged.astype(np.float64)
        final = 0.5 * float(action[-1]) if l_final is None else l_final
    else:
        l_values = np.asarray(l_pub, dtype=np.float64)
        final = float(l_values[-1]) if l_final is None else l_final

    region = np.where(l_values >= c_alpha, 1, np.where(l_values <= -c_alpha, -1, 0))
    return Trace(
        config=RunConfig(params=params, horizon=max(n, 2), seed=0),
        theta=None if theta is None else np.asarray(theta, dtype=np.int8),
        signal=action.copy(),
        l_pub=l_values,
        L_post=l_values + c_alpha * action,
        action=action,
        region=region.astype(np.int8),
        l_final=final,
    )


@pytest.fixture
def make_trace():
    return build_trace
