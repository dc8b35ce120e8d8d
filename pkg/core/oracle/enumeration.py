"""
Exact Joint Enumeration

Walks every (state path, signal path) pair of an n-period run, 4^n leaves
in all, with exact path probabilities, and returns the expected change
frequencies. Only the model maps are used, never the simulation engine,
so the result can serve as ground truth for Monte Carlo checks.
"""

from typing import Dict, Tuple

import structlog
from pydantic import BaseModel, ConfigDict

from core.errors import EnumerationRangeError
from core.model import (
    ModelParams,
    Region,
    Signal,
    cascade_decay,
    choose_action,
    classify_region,
    derive_constants,
    f0,
    f1,
    posterior_llr,
)

logger = structlog.get_logger()

MIN_HORIZON = 2
MAX_HORIZON = 10


class JointEnumeration(BaseModel):
    """Expected change frequencies over an n-period run (normalized by n - 1)."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    epsilon: float
    n: int
    paths: int
    expected_q_a: float
    expected_q_theta: float
    second_moment_q_a: float
    second_moment_q_theta: float

    @property
    def variance_q_a(self) -> float:
        return max(self.second_moment_q_a - self.expected_q_a**2, 0.0)

    @property
    def variance_q_theta(self) -> float:
        return max(self.second_moment_q_theta - self.expected_q_theta**2, 0.0)


def exact_joint_enumeration(params: ModelParams, n: int) -> JointEnumeration:
    """
    Exact E[Q_a] and E[Q_theta] (and second moments) for horizon n.

    Raises:
        EnumerationRangeError: unless 2 <= n <= 10
    """
    if not MIN_HORIZON <= n <= MAX_HORIZON:
        raise EnumerationRangeError(
            f"exact enumeration supports {MIN_HORIZON} <= n <= {MAX_HORIZON}, got {n}"
        )

    constants = derive_constants(params)
    alpha, eps = params.alpha, params.epsilon
    norm = float(n - 1)
    transitions: Dict[Tuple[float, int], float] = {}

    def next_l(l: float, s: int) -> float:
        key = (l, s)
        if key not in transitions:
            if classify_region(l, constants) is not Region.LEARNING:
                transitions[key] = cascade_decay(l, params)
            else:
                transitions[key] = f1(l, params) if s > 0 else f0(l, params)
        return transitions[key]

    totals = [0.0, 0.0, 0.0, 0.0, 0]

    def visit(
        t: int, theta: int, l: float, prev: int, prob: float, a_ch: int, th_ch: int
    ) -> None:
        for s in (1, -1):
            p_signal = alpha if s == theta else 1.0 - alpha
            posterior = posterior_llr(l, Signal(s), constants)
            a = int(choose_action(posterior, prev))
            a_changes = a_ch + (1 if t > 0 and a != prev else 0)
            branch = prob * p_signal

            if t == n - 1:
                q_a, q_theta = a_changes / norm, th_ch / norm
                totals[0] += branch * q_a
                totals[1] += branch * q_theta
                totals[2] += branch * q_a * q_a
                totals[3] += branch * q_theta * q_theta
                totals[4] += 1
                continue

            l_next = next_l(l, s)
            visit(t + 1, theta, l_next, a, branch * (1.0 - eps), a_changes, th_ch)
            visit(t + 1, -theta, l_next, a, branch * eps, a_changes, th_ch + 1)

    for theta_1 in (1, -1):
        # period 1 has no predecessor; l = 0 keeps the posterior away from a tie
        visit(0, theta_1, 0.0, 1, 0.5, 0, 0)

    result = JointEnumeration(
        alpha=alpha,
        epsilon=eps,
        n=n,
        paths=int(totals[4]),
        expected_q_a=totals[0],
        expected_q_theta=totals[1],
        second_moment_q_a=totals[2],
        second_moment_q_theta=totals[3],
    )
    logger.debug("Joint enumeration complete", n=n, paths=result.paths)
    return result
