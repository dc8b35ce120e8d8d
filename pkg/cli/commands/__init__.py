"""Subcommands, in the order they appear in --help."""

from cli.commands.oracle import OracleCommand
from cli.commands.simulate import SimulateCommand
from cli.commands.sweep import SweepCommand
from cli.commands.trace import TraceCommand
from cli.commands.verify import VerifyCommand

COMMANDS = [SimulateCommand, TraceCommand, SweepCommand, VerifyCommand, OracleCommand]

__all__ = [
    "COMMANDS",
    "OracleCommand",
    "SimulateCommand",
    "SweepCommand",
    "TraceCommand",
    "VerifyCommand",
]
