"""
    feature_error
    =============

    Errors raised by feature extraction and the binary file formats.
"""

from __future__ import annotations

from .base import ValidationError

__all__ = [
    'BadMagicError',
    'DimensionMismatchError',
    'EmptyAudioError',
]


class EmptyAudioError(ValidationError):
    """Audio buffer holds no samples."""


class BadMagicError(ValidationError):
    """Binary file does not start with the expected magic bytes."""


class DimensionMismatchError(ValidationError):
    """Operands or payload disagree on shape."""
