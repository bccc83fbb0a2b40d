"""
    audio_io
    ========

    Reading and writing 16-bit PCM WAV audio and segment lists.

    Segment list format, one segment per line (UTF-8):

        <id> <start_s> <end_s> [speaker]

    Blank lines and lines starting with `#` are ignored.

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
import logging
import os
import typing

import soundfile as sf

from .. import errors
from .. import models

__all__ = [
    'load_segments',
    'read_wav',
    'save_segments',
    'slice_segment',
    'total_duration',
    'write_wav',
]

logger = logging.getLogger(__name__)

PathType = typing.Union[str, os.PathLike]
WAV_FORMATS = ('WAV', 'WAVEX')
PCM_16 = 'PCM_16'


def read_wav(path: PathType) -> models.AudioBuffer:
    """
    Read a 16 kHz, 16-bit PCM WAV file, averaging stereo down to mono.

    :param path: WAV file path.
    :return: Mono buffer at 16 kHz.
    """

    path = os.fspath(path)
    if not os.path.isfile(path):
        raise errors.IoError('No such audio file', path)
    try:
        info = sf.info(path)
    except RuntimeError as error:
        raise errors.NotWavError(f'{path} is not a RIFF/WAVE file: {error}')

    if info.format not in WAV_FORMATS:
        raise errors.NotWavError(f'{path} is {info.format}, not RIFF/WAVE.')
    if info.subtype != PCM_16:
        raise errors.UnsupportedEncodingError(f'{path} holds {info.subtype}, only {PCM_16} is supported.')
    if info.samplerate != models.SAMPLE_RATE:
        raise errors.BadSampleRateError(info.samplerate, models.SAMPLE_RATE)

    data, rate = sf.read(path, dtype='int16', always_2d=True)
    channels = data.shape[1]
    samples = data[:, 0] if channels == 1 else data
    buf = models.AudioBuffer(samples, rate, channels)
    if channels > 1:
        logger.info('Downmixing %d channels of %s', channels, path)
    return buf.downmix()


def write_wav(path: PathType, buf: models.AudioBuffer) -> None:
    """Write a buffer as 16-bit PCM WAV."""

    try:
        sf.write(os.fspath(path), buf.samples, buf.sample_rate, subtype=PCM_16, format='WAV')
    except RuntimeError as error:
        raise errors.IoError(f'Cannot write audio ({error})', os.fspath(path))


def parse_segment_line(text: str, line: int) -> models.SegmentSpan:
    """Parse one non-comment line of a segment list."""

    fields = text.split()
    if len(fields) not in (3, 4):
        raise errors.ParseError(f'expected 3 or 4 fields, got {len(fields)}', line)
    try:
        segment_id = int(fields[0])
        start = fractions.Fraction(fields[1])
        end = fractions.Fraction(fields[2])
    except (ValueError, ZeroDivisionError):
        raise errors.ParseError(f'malformed segment {text.strip()!r}', line)
    speaker = fields[3] if len(fields) == 4 else None
    try:
        return models.SegmentSpan(segment_id, start, end, speaker)
    except errors.ParseError as error:
        raise errors.ParseError(str(error), line)


def load_segments(path: PathType) -> typing.List[models.SegmentSpan]:
    """
    Load a segment list, sorted by start time.

    :param path: Segment list path.
    :raises ParseError: Malformed line or duplicate id.
    :raises OverlapError: Two spans share time.
    """

    path = os.fspath(path)
    try:
        with open(path, encoding='utf-8') as f:
            lines = f.read().splitlines()
    except OSError as error:
        raise errors.IoError(f'Cannot read segment list ({error.strerror})', path)

    spans = []
    seen: typing.Set[int] = set()
    for number, text in enumerate(lines, 1):
        stripped = text.strip()
        if not stripped or stripped.startswith('#'):
            continue
        span = parse_segment_line(stripped, number)
        if span.segment_id in seen:
            raise errors.ParseError(f'duplicate segment id {span.segment_id}', number)
        seen.add(span.segment_id)
        spans.append(span)

    spans.sort(key=lambda i: (i.start_time, i.segment_id))
    for previous, current in zip(spans, spans[1:]):
        if previous.overlaps(current):
            raise errors.OverlapError(
                f'Segments {previous.segment_id} and {current.segment_id} overlap in {path}.'
            )
    logger.debug('Loaded %d segments from %s', len(spans), path)
    return spans


def save_segments(path: PathType, spans: typing.Iterable[models.SegmentSpan]) -> None:
    """Write spans in the segment list format, sorted by start time."""

    ordered = sorted(spans, key=lambda i: (i.start_time, i.segment_id))
    lines = ['# id start_s end_s [speaker]'] + [i.to_line() for i in ordered]
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write('\n'.join(lines) + '\n')
    except OSError as error:
        raise errors.IoError(f'Cannot write segment list ({error.strerror})', os.fspath(path))


def slice_segment(buf: models.AudioBuffer, span: models.SegmentSpan) -> models.AudioBuffer:
    """
    Cut the samples [floor(start*rate), floor(end*rate)) of a span.

    :raises OutOfRangeError: Span ends after the buffer.
    """

    start, stop = span.sample_range(buf.sample_rate)
    if stop > len(buf):
        raise errors.OutOfRangeError(
            f'Segment {span.segment_id} ends at sample {stop}, buffer holds {len(buf)}.'
        )
    return models.AudioBuffer(buf.samples[start:stop], buf.sample_rate, buf.channels)


def total_duration(spans: typing.Iterable[models.SegmentSpan]) -> float:
    """Get the seconds of audio covered by the spans."""
    return float(sum((i.end_time - i.start_time for i in spans), fractions.Fraction(0)))
