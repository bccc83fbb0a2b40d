"""
    config_error
    ============

    Errors raised while loading run configuration.
"""

from __future__ import annotations

from .base import ValidationError

__all__ = [
    'ConfigError',
]


class ConfigError(ValidationError):
    """Unknown key or badly typed value in the run configuration."""
