"""
    audio_error
    ===========

    Errors raised while reading audio and segment lists.
"""

from __future__ import annotations
import typing

from .base import ValidationError

__all__ = [
    'BadSampleRateError',
    'NotWavError',
    'OutOfRangeError',
    'OverlapError',
    'ParseError',
    'UnsupportedEncodingError',
]


class NotWavError(ValidationError):
    """File is not a RIFF/WAVE container."""


class UnsupportedEncodingError(ValidationError):
    """WAVE data is not 16-bit PCM."""


class BadSampleRateError(ValidationError):
    """Sample rate differs from the required 16 kHz."""

    sample_rate: int

    def __init__(self, sample_rate: int, expected: int):
        super().__init__(f'Sample rate {sample_rate} Hz, expected {expected} Hz.')
        self.sample_rate = sample_rate


class ParseError(ValidationError):
    """Malformed line in a segment list or configuration file."""

    line: typing.Optional[int]

    def __init__(self, message: str, line: typing.Optional[int] = None):
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)
        self.line = line


class OverlapError(ValidationError):
    """Two segment spans of the same file overlap."""


class OutOfRangeError(ValidationError):
    """Segment span extends past the end of the audio buffer."""
