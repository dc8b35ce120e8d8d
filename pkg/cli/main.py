"""
Command-Line Entry Point

Run with: fads <subcommand> [flags]  (or python -m cli)
"""

import argparse
from typing import List, Optional

from cli.commands import COMMANDS
from core.config import settings
from core.logging import configure_logging


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fads",
        description="Simulate and verify fads in sequential social learning with a changing state",
    )
    parser.add_argument("--log-level", default=None, help=f"default {settings.log_level}")
    parser.add_argument("--log-format", choices=["console", "json"], default=None)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.add_parser(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.log_level, args.log_format)
    del args.log_level, args.log_format
    return args.handler().run(args)


if __name__ == "__main__":
    raise SystemExit(main())
