"""Oracle module exports."""

from core.oracle.bounds import (
    TABLE_COLUMNS,
    BoundsRow,
    BoundsTable,
    belief_cascade_length,
    cascade_length_from_sup,
    check_point,
    default_grid,
    verify_bounds,
)
from core.oracle.enumeration import JointEnumeration, exact_joint_enumeration
from core.oracle.gaps import (
    GapEnumerator,
    OracleResult,
    default_depth,
    expected_gap_interval,
    post_switch_values,
)

__all__ = [
    "TABLE_COLUMNS",
    "BoundsRow",
    "BoundsTable",
    "GapEnumerator",
    "JointEnumeration",
    "OracleResult",
    "belief_cascade_length",
    "cascade_length_from_sup",
    "check_point",
    "default_depth",
    "default_grid",
    "exact_joint_enumeration",
    "expected_gap_interval",
    "post_switch_values",
    "verify_bounds",
]
