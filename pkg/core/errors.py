"""
Error Types

Exception hierarchy shared by the model, engine, analytics and oracle
packages. The CLI maps these onto its exit codes.
"""

from typing import Any, Dict, List, Optional


class FadsError(Exception):
    """Base class for all library errors."""


class ParameterError(FadsError, ValueError):
    """A model parameter lies outside its admissible domain."""

    def __init__(self, message: str, bound: Optional[str] = None):
        super().__init__(message)
        self.bound = bound


class TraceTooShortError(FadsError, ValueError):
    """A statistic needs more periods than the trace holds."""


class InsufficientSwitchesError(FadsError):
    """Fewer than two sign switches were observed."""


class TraceInvariantError(FadsError):
    """A simulated path breaks one of the model's per-period invariants."""


class MixedParametersError(FadsError, ValueError):
    """Traces passed to one report were generated under different parameters."""


class EnumerationRangeError(FadsError, ValueError):
    """Exact enumeration was requested outside its supported horizon."""


class VerificationError(FadsError):
    """One or more bound checks failed."""

    def __init__(self, message: str, failures: Optional[List[Dict[str, Any]]] = None):
        super().__init__(message)
        self.failures = failures or []
