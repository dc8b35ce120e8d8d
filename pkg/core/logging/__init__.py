"""Logging module exports."""

from core.logging.setup import configure_logging

__all__ = ["configure_logging"]
