"""
    feature_config
    ==============

    Front-end parameters for MFCC extraction.

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

from ... import errors
from ... import util

__all__ = ['FeatureConfig']

RECORD_TYPES: typing.Dict[str, typing.Callable] = {
    'frame_len_ms': int,
    'frame_shift_ms': int,
    'n_mfcc': int,
    'include_energy': bool,
    'include_delta': bool,
    'include_delta_delta': bool,
    'n_mel_filters': int,
    'preemphasis': float,
}


@util.dataclass(
    frozen=True,
    frame_len_ms=25,
    frame_shift_ms=10,
    n_mfcc=12,
    include_energy=True,
    include_delta=True,
    include_delta_delta=False,
    n_mel_filters=26,
    preemphasis=0.97,
)
class FeatureConfig(util.Record):
    """
    MFCC front-end configuration.

    The defaults give 12 MFCC + log energy + their first derivatives,
    25 ms Hamming frames every 10 ms.

    :param frame_len_ms: Frame length in milliseconds.
    :param frame_shift_ms: Frame shift in milliseconds.
    :param n_mfcc: Cepstral coefficients kept, c1..c{n_mfcc}.
    :param include_energy: Append the log frame energy.
    :param include_delta: Append first-order regression deltas.
    :param include_delta_delta: Append second-order regression deltas.
    :param n_mel_filters: Triangular mel filters from 0 Hz to Nyquist.
    :param preemphasis: Pre-emphasis coefficient in [0, 1).
    """

    frame_len_ms: int
    frame_shift_ms: int
    n_mfcc: int
    include_energy: bool
    include_delta: bool
    include_delta_delta: bool
    n_mel_filters: int
    preemphasis: float

    def __post_init__(self) -> None:
        if self.frame_len_ms <= 0 or self.frame_shift_ms <= 0:
            raise errors.ConfigError('Frame length and shift must be positive.')
        if self.n_mfcc < 1:
            raise errors.ConfigError('n_mfcc must be at least 1.')
        if self.n_mel_filters < self.n_mfcc:
            raise errors.ConfigError('n_mel_filters must be at least n_mfcc.')
        if not 0.0 <= self.preemphasis < 1.0:
            raise errors.ConfigError('preemphasis must lie in [0, 1).')

    @property
    def static_dimension(self) -> int:
        """Get the dimension of the static part (MFCC + energy)."""
        return self.n_mfcc + int(self.include_energy)

    @property
    def dimension(self) -> int:
        """Get the full feature dimension d including deltas."""

        blocks = 1 + int(self.include_delta) + int(self.include_delta_delta)
        return self.static_dimension * blocks

    def frame_length(self, sample_rate: int) -> int:
        """Get the window length W in samples."""
        return sample_rate * self.frame_len_ms // 1000

    def frame_shift(self, sample_rate: int) -> int:
        """Get the hop H in samples."""
        return sample_rate * self.frame_shift_ms // 1000

    def fft_size(self, sample_rate: int) -> int:
        """Get the next power of two at least the window length."""

        size = 1
        while size < self.frame_length(sample_rate):
            size *= 2
        return size

    def to_record(self) -> util.RecordFormat:
        return {key: getattr(self, key) for key in RECORD_TYPES}

    @classmethod
    def create_from_record(cls, data: typing.Mapping[str, typing.Any]) -> FeatureConfig:
        keys = set(RECORD_TYPES)
        if not cls.validate_record_keys(data, set(), keys):
            raise errors.ConfigError(f'Unknown feature keys: {sorted(set(data) - keys)}.')
        return cls(**{k: util.coerce(v, RECORD_TYPES[k]) for k, v in data.items()})
