"""Simulation engine exports."""

from core.engine.export import (
    guide_values,
    read_trace_frame,
    write_guides,
    write_trace,
)
from core.engine.invariants import assert_trace_invariants, trace_violations
from core.engine.kernel import LikelihoodKernel
from core.engine.rng import RNG_NAME, RNG_VERSION, draw_block, make_generator, rng_contract
from core.engine.simulator import sample_first_switch_times, simulate, simulate_l_chain
from core.engine.trace import TRACE_COLUMNS, RunConfig, Trace, TraceStep

__all__ = [
    "LikelihoodKernel",
    "RNG_NAME",
    "RNG_VERSION",
    "RunConfig",
    "TRACE_COLUMNS",
    "Trace",
    "TraceStep",
    "assert_trace_invariants",
    "draw_block",
    "guide_values",
    "make_generator",
    "read_trace_frame",
    "rng_contract",
    "sample_first_switch_times",
    "simulate",
    "simulate_l_chain",
    "trace_violations",
    "write_guides",
    "write_trace",
]
