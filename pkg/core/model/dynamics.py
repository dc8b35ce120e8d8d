"""
Belief and Action Maps

One-step maps of the public likelihood l (log-odds of the up state given
past actions): the learning-region updates f1/f0, the deterministic
cascade decay, the posterior shift by the private signal, the action rule
with its follow-the-predecessor tie-break, region classification and the
marginal up-signal probability.

All maps work in log-odds space and accept scalars or numpy arrays.
"""

import math
from typing import Union

import numpy as np
from numpy.typing import NDArray
from scipy.special import expit

from core.model.types import (
    Action,
    DerivedConstants,
    LikelihoodLike,
    ModelParams,
    Region,
    Signal,
)

FloatOrArray = Union[float, NDArray[np.float64]]


def _ratio_map(l: LikelihoodLike, a: float, b: float, c: float, d: float) -> FloatOrArray:
    """log((a e^l + b) / (c e^l + d)) without overflowing e^l."""
    if np.ndim(l) == 0:
        x = float(l)
        if x > 0:
            t = math.exp(-x)
            return math.log(a + b * t) - math.log(c + d * t)
        t = math.exp(x)
        return math.log(a * t + b) - math.log(c * t + d)
    values = np.asarray(l, dtype=np.float64)
    return np.logaddexp(values + math.log(a), math.log(b)) - np.logaddexp(
        values + math.log(c), math.log(d)
    )


def f1(l: LikelihoodLike, params: ModelParams) -> FloatOrArray:
    """Next public likelihood after an up action in the learning region."""
    a, e = params.alpha, params.epsilon
    return _ratio_map(l, (1 - e) * a, e * (1 - a), e * a, (1 - e) * (1 - a))


def f0(l: LikelihoodLike, params: ModelParams) -> FloatOrArray:
    """Next public likelihood after a down action in the learning region."""
    a, e = params.alpha, params.epsilon
    return _ratio_map(l, (1 - e) * (1 - a), e * a, e * (1 - a), (1 - e) * a)


def cascade_decay(l: LikelihoodLike, params: ModelParams) -> FloatOrArray:
    """Next public likelihood when the action reveals nothing (cascade region)."""
    e = params.epsilon
    return _ratio_map(l, 1 - e, e, e, 1 - e)


def posterior_llr(l: LikelihoodLike, s: Signal, constants: DerivedConstants) -> FloatOrArray:
    """Posterior likelihood L = l + c_alpha * s."""
    shifted = np.asarray(l, dtype=np.float64) + int(s) * constants.c_alpha
    return shifted if shifted.ndim else float(shifted)


def choose_action(posterior: float, prev_action: Action) -> Action:
    """Strict preference by the sign of the posterior; at indifference repeat the predecessor."""
    if posterior > 0:
        return Action.UP
    if posterior < 0:
        return Action.DOWN
    return Action(prev_action)


def classify_region(l: float, constants: DerivedConstants) -> Region:
    """Cascade iff |l| >= c_alpha, compared exactly."""
    if l >= constants.c_alpha:
        return Region.UP_CASCADE
    if l <= -constants.c_alpha:
        return Region.DOWN_CASCADE
    return Region.LEARNING


def signal_prob_up(l: LikelihoodLike, params: ModelParams) -> FloatOrArray:
    """
    Probability of an up-signal given public likelihood l, marginal over the state.

    pi(l) = (1 + alpha (e^l - 1)) / (1 + e^l) = (1 - alpha) + (2 alpha - 1) q.
    """
    a = params.alpha
    if np.ndim(l) == 0:
        x = float(l)
        if x >= 0:
            q = 1.0 / (1.0 + math.exp(-x))
        else:
            t = math.exp(x)
            q = t / (1.0 + t)
        return (1.0 - a) + (2.0 * a - 1.0) * q
    return (1.0 - a) + (2.0 * a - 1.0) * expit(np.asarray(l, dtype=np.float64))
