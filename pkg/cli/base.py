"""
Base Command Module

Provides the abstract base class for all subcommands and the exit-code
contract: 0 ok, 1 I/O error, 2 validation or other model error,
3 verification failure.
"""

import argparse
import sys
from abc import ABC, abstractmethod
from datetime import datetime, timezone
from enum import IntEnum
from typing import List, Optional
from uuid import uuid4

import structlog
from pydantic import BaseModel, Field

from cli.config import CliConfig, add_shared_arguments, resolve_config
from core.errors import FadsError, VerificationError

logger = structlog.get_logger()


class ExitCode(IntEnum):
    OK = 0
    IO_ERROR = 1
    VALIDATION_ERROR = 2
    VERIFICATION_FAILED = 3


# =============================================================================
# Command State
# =============================================================================

class CommandState(BaseModel):
    """Bookkeeping for one command invocation."""

    run_id: str = Field(default_factory=lambda: uuid4().hex[:12])
    command: str
    status: str = "created"  # created, running, done, failed
    started_at: Optional[datetime] = None
    finished_at: Optional[datetime] = None
    exit_code: Optional[int] = None
    outputs: List[str] = Field(default_factory=list)


# =============================================================================
# Base Command
# =============================================================================

class BaseCommand(ABC):
    """
    Abstract base class for subcommands.

    Subclasses set NAME and HELP, add their own flags in
    ``register_arguments`` and do their work in ``execute``.
    """

    NAME: str = "base"
    HELP: str = ""

    def __init__(self) -> None:
        self.state = CommandState(command=self.NAME)
        self.logger = logger.bind(command=self.NAME, run_id=self.state.run_id)

    @classmethod
    def add_parser(cls, subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(cls.NAME, help=cls.HELP, description=cls.HELP)
        add_shared_arguments(parser)
        cls.register_arguments(parser)
        parser.set_defaults(handler=cls)
        return parser

    @classmethod
    def register_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Add subcommand-specific flags. Override in subclasses."""

    @abstractmethod
    def execute(self, config: CliConfig) -> ExitCode:
        """Do the work of the command and return its exit code."""

    def emit(self, line: str) -> None:
        """Write one summary line to stdout."""
        print(line, flush=True)

    def record_output(self, path: object) -> None:
        self.state.outputs.append(str(path))

    def run(self, args: argparse.Namespace) -> int:
        """Resolve options, execute and map failures onto exit codes."""
        self.state.status = "running"
        self.state.started_at = datetime.now(timezone.utc)

        try:
            config = resolve_config(self.NAME, args)
            code = self.execute(config)
        except VerificationError as e:
            code = self._fail(ExitCode.VERIFICATION_FAILED, e)
        except OSError as e:
            code = self._fail(ExitCode.IO_ERROR, e)
        except (ValueError, FadsError) as e:
            code = self._fail(ExitCode.VALIDATION_ERROR, e)

        self.state.exit_code = int(code)
        self.state.finished_at = datetime.now(timezone.utc)
        if self.state.status == "running":
            self.state.status = "done" if code == ExitCode.OK else "failed"
        self.logger.info(
            "Command finished",
            exit_code=int(code),
            outputs=self.state.outputs,
        )
        return int(code)

    def _fail(self, code: ExitCode, error: Exception) -> ExitCode:
        self.state.status = "failed"
        self.logger.error("Command failed", error=str(error), exit_code=int(code))
        print(f"error: {error}", file=sys.stderr)
        return code
