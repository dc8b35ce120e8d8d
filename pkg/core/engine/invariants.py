"""
Trace Invariants

Whole-path checks of the per-period records: region labels, the action
rule, the link a_t = sign(l_{t+1}), the transition map used between
consecutive periods and the supremum of |l|. Map comparisons use the
configured absolute tolerance in log-odds units.
"""

from typing import List, Optional

import numpy as np

from core.config import settings
from core.engine.trace import Trace
from core.errors import TraceInvariantError
from core.model import cascade_decay, derive_constants, f0, f1


def trace_violations(trace: Trace, tolerance: Optional[float] = None) -> List[str]:
    """Descriptions of every invariant the trace breaks (empty when none)."""
    tol = settings.tolerance if tolerance is None else tolerance
    params = trace.params
    constants = derive_constants(params)
    l_pub, region, action = trace.l_pub, trace.region, trace.action
    following = trace.public_path[1:]
    problems: List[str] = []

    expected_region = np.where(
        l_pub >= constants.c_alpha, 1, np.where(l_pub <= -constants.c_alpha, -1, 0)
    )
    if not np.array_equal(region, expected_region):
        problems.append(f"region mislabeled at t={_first(region != expected_region)}")

    learning = (region == 0) & (trace.L_post != 0)
    bad = learning & (action != np.sign(trace.L_post))
    if bad.any():
        problems.append(f"learning action ignores the posterior at t={_first(bad)}")

    bad = (region != 0) & (action != np.sign(l_pub))
    if bad.any():
        problems.append(f"cascade action differs from sign(l) at t={_first(bad)}")

    bad = (following != 0) & (action != np.sign(following))
    if bad.any():
        problems.append(f"a_t != sign(l_(t+1)) at t={_first(bad)}")

    expected = np.where(
        region != 0,
        cascade_decay(l_pub, params),
        np.where(trace.signal > 0, f1(l_pub, params), f0(l_pub, params)),
    )
    bad = np.abs(following - expected) > tol
    if bad.any():
        problems.append(f"transition map mismatch at t={_first(bad)}")

    if np.any(np.abs(trace.public_path) > constants.l_sup + tol):
        problems.append("|l| exceeds f1(c_alpha)")
    return problems


def assert_trace_invariants(trace: Trace, tolerance: Optional[float] = None) -> None:
    problems = trace_violations(trace, tolerance)
    if problems:
        raise TraceInvariantError(f"trace (seed {trace.config.seed}): " + "; ".join(problems))


def _first(mask: np.ndarray) -> int:
    return int(np.flatnonzero(mask)[0]) + 1
