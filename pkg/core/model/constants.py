"""
Derived Constants

Closed forms for the signal log-likelihood ratio, the one-signal cascade
threshold, the cascade-length cap K and the switch-gap bound M.
"""

import math
from functools import lru_cache
from typing import Optional

import structlog

from core.config import settings
from core.errors import ParameterError
from core.model.types import DerivedConstants, ModelParams

logger = structlog.get_logger()


def derive_constants(params: ModelParams, margin: Optional[float] = None) -> DerivedConstants:
    """
    Compute every closed-form constant for a parameter pair.

    Args:
        params: Validated model parameters
        margin: Rejection distance from the open interval ends
            (defaults to settings.boundary_margin)

    Raises:
        ParameterError: if alpha or epsilon sits within ``margin`` of a bound
    """
    if margin is None:
        margin = settings.boundary_margin
    return _derive(params.alpha, params.epsilon, margin)


@lru_cache(maxsize=256)
def _derive(alpha: float, epsilon: float, margin: float) -> DerivedConstants:
    upper = alpha * (1.0 - alpha)
    if alpha - 0.5 < margin:
        raise ParameterError(
            f"alpha={alpha} is within {margin} of the bound alpha > 1/2", "alpha>1/2"
        )
    if 1.0 - alpha < margin:
        raise ParameterError(
            f"alpha={alpha} is within {margin} of the bound alpha < 1", "alpha<1"
        )
    if epsilon < margin:
        raise ParameterError(
            f"epsilon={epsilon} is within {margin} of the bound epsilon > 0", "epsilon>0"
        )
    if upper - epsilon < margin:
        raise ParameterError(
            f"epsilon={epsilon} is within {margin} of the bound "
            f"epsilon < alpha*(1-alpha)={upper:.6g}",
            "epsilon<alpha(1-alpha)",
        )

    c_alpha = math.log(alpha / (1.0 - alpha))
    c_u = math.log((1.0 - alpha) * (alpha - epsilon) / (alpha * (1.0 - alpha - epsilon)))

    cascade_mass = 1.0 - 2.0 * upper
    cap_K = math.log(cascade_mass) / math.log(abs(1.0 - 2.0 * epsilon))
    fad_bound_M = 1.0 + cap_K / (2.0 * upper)

    # f1(c_alpha), written out so this module does not depend on the maps
    x = alpha / (1.0 - alpha)
    l_sup = math.log(
        ((1.0 - epsilon) * alpha * x + epsilon * (1.0 - alpha))
        / (epsilon * alpha * x + (1.0 - epsilon) * (1.0 - alpha))
    )
    belief_sup = ((1.0 - epsilon) * alpha**2 + epsilon * (1.0 - alpha) ** 2) / cascade_mass

    constants = DerivedConstants(
        c_alpha=c_alpha,
        c_u=c_u,
        cap_K=cap_K,
        cap_K_floor=math.floor(cap_K),
        fad_bound_M=fad_bound_M,
        l_sup=l_sup,
        belief_sup=belief_sup,
        expected_state_gap=1.0 / epsilon,
    )
    logger.debug(
        "Derived constants",
        alpha=alpha,
        epsilon=epsilon,
        cap_K=cap_K,
        fad_bound_M=fad_bound_M,
    )
    return constants
