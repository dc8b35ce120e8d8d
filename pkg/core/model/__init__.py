"""Model module exports."""

from core.model.constants import derive_constants
from core.model.dynamics import (
    cascade_decay,
    choose_action,
    classify_region,
    f0,
    f1,
    posterior_llr,
    signal_prob_up,
)
from core.model.types import (
    Action,
    DerivedConstants,
    Likelihood,
    ModelParams,
    Region,
    Signal,
    StateValue,
    from_belief,
    to_belief,
)

__all__ = [
    "Action",
    "DerivedConstants",
    "Likelihood",
    "ModelParams",
    "Region",
    "Signal",
    "StateValue",
    "cascade_decay",
    "choose_action",
    "classify_region",
    "derive_constants",
    "f0",
    "f1",
    "from_belief",
    "posterior_llr",
    "signal_prob_up",
    "to_belief",
]
