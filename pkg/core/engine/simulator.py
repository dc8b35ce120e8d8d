"""
Simulation Engine

Generates sample paths under the model's event timing. In every period:
the state transitions (period 1: drawn uniformly), the agent receives a
signal matching the state with probability alpha, acts on the posterior
likelihood, and the public likelihood moves to the next period by f1/f0
(learning region, keyed on the realized signal) or by the cascade decay.

The marginal l-chain replaces the state with the up-signal probability
pi(l); its paths carry no theta column.

The per-period loop inlines posterior_llr and choose_action; it must stay
in step with them.
"""

import math
from typing import List, Optional, Sequence

import numpy as np
import structlog
from numpy.typing import NDArray

from core.engine.kernel import LikelihoodKernel
from core.engine.rng import SIGNAL, TRANSITION, draw_block, make_generator
from core.engine.trace import RunConfig, Trace
from core.model import ModelParams

logger = structlog.get_logger()

# Predecessor of agent 1. With l_1 = 0 the posterior is +/- c_alpha, so the
# tie-break is never consulted in period 1.
FIRST_PREDECESSOR = 1


# =============================================================================
# Full Model
# =============================================================================

def simulate(config: RunConfig) -> Trace:
    """Run the full model (states, signals, beliefs, actions) for one seed."""
    params = config.params
    n = config.horizon
    draws = draw_block(make_generator(config.seed), n)

    flips = draws[:, TRANSITION] < params.epsilon
    flips[0] = False
    theta_1 = 1 if draws[0, TRANSITION] < 0.5 else -1
    theta = (theta_1 * np.cumprod(np.where(flips, -1, 1))).astype(np.int8)
    signal = np.where(draws[:, SIGNAL] < params.alpha, theta, -theta).astype(np.int8)

    trace = _run_public_chain(config, signal.tolist(), theta=theta)
    logger.debug(
        "Simulation complete",
        alpha=params.alpha,
        epsilon=params.epsilon,
        horizon=n,
        seed=config.seed,
    )
    return trace


def _run_public_chain(
    config: RunConfig,
    signals: List[int],
    theta: Optional[NDArray[np.int8]],
) -> Trace:
    kernel = LikelihoodKernel(config.params)
    c = kernel.c_alpha
    n = config.horizon

    l_pub = np.empty(n, dtype=np.float64)
    L_post = np.empty(n, dtype=np.float64)
    action = np.empty(n, dtype=np.int8)
    region = np.empty(n, dtype=np.int8)

    learn_up, learn_down, decay = kernel.learn_up, kernel.learn_down, kernel.decay
    l = 0.0
    prev = FIRST_PREDECESSOR
    for t in range(n):
        s = signals[t]
        posterior = l + c if s > 0 else l - c
        if posterior > 0:
            a = 1
        elif posterior < 0:
            a = -1
        else:
            if t == 0:
                raise RuntimeError("Tie-break reached in period 1")
            a = prev

        l_pub[t] = l
        L_post[t] = posterior
        action[t] = a
        if l >= c:
            region[t] = 1
            l = decay(l)
        elif l <= -c:
            region[t] = -1
            l = decay(l)
        else:
            region[t] = 0
            l = learn_up(l) if s > 0 else learn_down(l)
        prev = a

    signal_array = np.asarray(signals, dtype=np.int8)
    return Trace(
        config=config,
        theta=theta,
        signal=signal_array,
        l_pub=l_pub,
        L_post=L_post,
        action=action,
        region=region,
        l_final=l,
    )


# =============================================================================
# Marginal l-Chain
# =============================================================================

def simulate_l_chain(config: RunConfig) -> Trace:
    """
    Drive the public likelihood alone: in the learning region the signal is
    up with probability pi(l); cascade periods decay deterministically.
    """
    kernel = LikelihoodKernel(config.params)
    u = draw_block(make_generator(config.seed), config.horizon)[:, SIGNAL].tolist()

    # Signals depend on the path, so they are realized inside the loop.
    signals: List[int] = []
    l = 0.0
    for t in range(config.horizon):
        s = 1 if u[t] < kernel.prob_up(l) else -1
        signals.append(s)
        l = kernel.advance(l, s)

    trace = _run_public_chain(config, signals, theta=None)
    logger.debug(
        "l-chain simulation complete",
        alpha=config.params.alpha,
        epsilon=config.params.epsilon,
        horizon=config.horizon,
        seed=config.seed,
    )
    return trace


# =============================================================================
# First Sign Switches
# =============================================================================

def sample_first_switch_times(
    params: ModelParams,
    seeds: Sequence[int],
    l_start: float = 0.0,
    marginal: bool = False,
    max_periods: int = 1_000_000,
) -> NDArray[np.int64]:
    """
    Periods elapsed from ``l_start`` until the public likelihood first takes
    the opposite sign, one sample per seed.

    With l_start = 0 the reference sign is the first nonzero sign reached.
    In the full model the initial state is drawn with P(theta = +1) equal to
    the belief implied by ``l_start``, which is uniform at 0.
    """
    kernel = LikelihoodKernel(params)
    q_start = 1.0 / (1.0 + math.exp(-l_start))
    samples = np.empty(len(seeds), dtype=np.int64)

    for i, seed in enumerate(seeds):
        generator = make_generator(seed)
        block = draw_block(generator, 64)
        row = 0
        l = l_start
        reference = (l > 0) - (l < 0)
        theta = 1 if block[0, TRANSITION] < q_start else -1
        elapsed = 0
        while True:
            if row == len(block):
                block = draw_block(generator, 64)
                row = 0
            u_transition, u_signal = block[row]
            row += 1
            if marginal:
                s = 1 if u_signal < kernel.prob_up(l) else -1
            else:
                if elapsed > 0 and u_transition < params.epsilon:
                    theta = -theta
                s = theta if u_signal < params.alpha else -theta
            l = kernel.advance(l, s)
            elapsed += 1

            sign = (l > 0) - (l < 0)
            if reference == 0:
                reference = sign
            elif sign == -reference:
                break
            if elapsed >= max_periods:
                raise RuntimeError(f"No sign switch within {max_periods} periods (seed {seed})")
        samples[i] = elapsed

    return samples
