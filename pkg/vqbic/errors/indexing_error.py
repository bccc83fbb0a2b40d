"""
    indexing_error
    ==============

    Errors raised by threshold estimation and evaluation.
"""

from __future__ import annotations

from .base import ValidationError

__all__ = [
    'EmptyAssignmentError',
    'HalfTooShortError',
    'KeyMismatchError',
    'ThresholdError',
    'TooFewUsableSegmentsError',
]


class HalfTooShortError(ValidationError):
    """A segment half has fewer than d + 1 frames."""


class TooFewUsableSegmentsError(ValidationError):
    """Fewer than two segments yielded a threshold bound."""


class ThresholdError(ValidationError):
    """Estimated tuning parameter is not positive."""


class KeyMismatchError(ValidationError):
    """Assignment, reference and weights cover different segments."""


class EmptyAssignmentError(ValidationError):
    """No segments to score."""
