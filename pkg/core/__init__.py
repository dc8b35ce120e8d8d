"""
Social Fads - Core Module

Model maps, simulation engine, fad statistics and enumeration oracle for
sequential social learning when the underlying binary state keeps changing.
"""

from core.config.settings import settings
from core.errors import FadsError
from core.model import DerivedConstants, ModelParams, derive_constants

__all__ = [
    "settings",
    "FadsError",
    "DerivedConstants",
    "ModelParams",
    "derive_constants",
]
