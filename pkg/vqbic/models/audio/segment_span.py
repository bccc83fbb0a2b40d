"""
    segment_span
    ============

    Time span of one speaker-homogeneous segment.

    License
    -------

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
"""

from __future__ import annotations
import fractions
import math
import typing

from ... import errors
from ... import util

__all__ = ['SegmentSpan']

TimeType = typing.Union[fractions.Fraction, int, str]


@util.dataclass(frozen=True)
class SegmentSpan:
    """
    Half-open time span [start_time, end_time) of a segment.

    Times are exact rationals, so converting them to sample indices never
    suffers from binary floating-point rounding.

    :param segment_id: Segment identifier, unique within a file.
    :param start_time: Start in seconds, non-negative.
    :param end_time: End in seconds, greater than the start.
    :param ref_speaker: (Optional) reference speaker label.
    """

    segment_id: int
    start_time: fractions.Fraction
    end_time: fractions.Fraction
    ref_speaker: typing.Optional[str]

    def __init__(
        self,
        segment_id: int,
        start_time: TimeType,
        end_time: TimeType,
        ref_speaker: typing.Optional[str] = None,
    ) -> None:
        start = fractions.Fraction(start_time)
        end = fractions.Fraction(end_time)
        if segment_id < 0:
            raise errors.ParseError(f'Negative segment id {segment_id}.')
        if start < 0:
            raise errors.ParseError(f'Segment {segment_id} starts before 0.')
        if end <= start:
            raise errors.ParseError(f'Segment {segment_id} ends before it starts.')
        self._set('segment_id', segment_id)
        self._set('start_time', start)
        self._set('end_time', end)
        self._set('ref_speaker', ref_speaker or None)

    @property
    def duration(self) -> float:
        """Get the span length in seconds."""
        return float(self.end_time - self.start_time)

    def sample_range(self, sample_rate: int) -> typing.Tuple[int, int]:
        """Get the half-open sample range [floor(start*rate), floor(end*rate))."""

        start = math.floor(self.start_time * sample_rate)
        stop = math.floor(self.end_time * sample_rate)
        return start, stop

    def overlaps(self, other: SegmentSpan) -> bool:
        """Check if two half-open spans share any time."""
        return self.start_time < other.end_time and other.start_time < self.end_time

    def to_line(self) -> str:
        """Format the span as a segment list line."""

        fields = [
            str(self.segment_id),
            format_time(self.start_time),
            format_time(self.end_time),
        ]
        if self.ref_speaker is not None:
            fields.append(self.ref_speaker)
        return ' '.join(fields)


def format_time(value: fractions.Fraction) -> str:
    """Format an exact time as a decimal, or as a ratio if not terminating."""

    if value.denominator == 1:
        return f'{value.numerator}.0'
    # Terminating decimals have denominators of the form 2^a 5^b.
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return f'{value.numerator}/{value.denominator}'

    places = max(twos, fives)
    scaled = value * 10 ** places
    assert scaled.denominator == 1
    digits = str(abs(scaled.numerator)).rjust(places + 1, '0')
    sign = '-' if value < 0 else ''
    return f'{sign}{digits[:-places]}.{digits[-places:]}'
