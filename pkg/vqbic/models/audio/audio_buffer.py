"""
    audio_buffer
    ============

    Mono 16-bit PCM samples at 16 kHz.

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
import typing

import numpy as np

from ... import errors
from ... import util

__all__ = [
    'AudioBuffer',
    'SAMPLE_RATE',
]

SAMPLE_RATE = 16000


@util.dataclass(frozen=True)
class AudioBuffer:
    """
    Block of interleaved signed 16-bit samples.

    After ingestion by `read_wav` the buffer is always mono at 16 kHz;
    other layouts only exist transiently while reading.

    :param samples: Samples, shape (S,) for mono or (S, channels).
    :param sample_rate: Sample rate in Hz.
    :param channels: Number of channels.
    """

    samples: np.ndarray
    sample_rate: int
    channels: int

    def __init__(
        self,
        samples: typing.Any,
        sample_rate: int = SAMPLE_RATE,
        channels: int = 1,
    ) -> None:
        array = util.freeze_array(samples, dtype=np.int16)
        expected_ndim = 1 if channels == 1 else 2
        if channels < 1 or array.ndim != expected_ndim:
            raise errors.DimensionMismatchError(
                f'Samples of shape {array.shape} do not match {channels} channel(s).'
            )
        if channels > 1 and array.shape[1] != channels:
            raise errors.DimensionMismatchError(
                f'Samples have {array.shape[1]} columns, expected {channels}.'
            )
        if sample_rate <= 0:
            raise errors.BadSampleRateError(sample_rate, SAMPLE_RATE)
        self._set('samples', array)
        self._set('sample_rate', sample_rate)
        self._set('channels', channels)

    def __len__(self) -> int:
        return int(self.samples.shape[0])

    @property
    def duration(self) -> float:
        """Get the buffer duration in seconds."""
        return len(self) / self.sample_rate

    def downmix(self) -> AudioBuffer:
        """Average all channels into one, rounding half to even."""

        if self.channels == 1:
            return self
        total = self.samples.astype(np.int64).sum(axis=1)
        mono = np.rint(total / self.channels).astype(np.int16)
        return AudioBuffer(mono, self.sample_rate, 1)
