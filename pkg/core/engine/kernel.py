"""
Transition Kernel

Scalar versions of the one-step maps with their coefficients precomputed.
The simulation loops call these once per period; reachable values satisfy
|l| <= f1(c_alpha), so e^l never overflows here.
"""

import math
from typing import Optional, Tuple

from core.model import DerivedConstants, ModelParams, derive_constants


class LikelihoodKernel:
    """Per-parameter closure over the learning maps and the cascade decay."""

    def __init__(self, params: ModelParams, constants: Optional[DerivedConstants] = None):
        self.params = params
        self.constants = constants or derive_constants(params)
        self.c_alpha = self.constants.c_alpha

        a, e = params.alpha, params.epsilon
        self._up = ((1 - e) * a, e * (1 - a), e * a, (1 - e) * (1 - a))
        self._down = ((1 - e) * (1 - a), e * a, e * (1 - a), (1 - e) * a)
        self._decay = (1 - e, e, e, 1 - e)
        self._pi_base = 1.0 - a
        self._pi_slope = 2.0 * a - 1.0

    @staticmethod
    def _apply(coeffs: Tuple[float, float, float, float], l: float) -> float:
        x = math.exp(l)
        return math.log((coeffs[0] * x + coeffs[1]) / (coeffs[2] * x + coeffs[3]))

    def learn_up(self, l: float) -> float:
        return self._apply(self._up, l)

    def learn_down(self, l: float) -> float:
        return self._apply(self._down, l)

    def decay(self, l: float) -> float:
        return self._apply(self._decay, l)

    def region(self, l: float) -> int:
        if l >= self.c_alpha:
            return 1
        if l <= -self.c_alpha:
            return -1
        return 0

    def advance(self, l: float, signal: int) -> float:
        """Public likelihood of the next period given this period's signal."""
        if l >= self.c_alpha or l <= -self.c_alpha:
            return self.decay(l)
        return self.learn_up(l) if signal > 0 else self.learn_down(l)

    def prob_up(self, l: float) -> float:
        """Marginal up-signal probability pi(l)."""
        return self._pi_base + self._pi_slope / (1.0 + math.exp(-l))
