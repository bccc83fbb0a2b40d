"""
    feature_matrix
    ==============

    Per-segment sequence of acoustic frames.

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

__all__ = ['FeatureMatrix']


@util.dataclass(frozen=True)
class FeatureMatrix(util.Binary):
    """
    T x d matrix of 32-bit feature frames for one segment.

    Binary Format:
        .. code-block:: text

            magic: "FEA1"
            T: uint32 (little-endian)
            d: uint32 (little-endian)
            frames: float32[T * d] (little-endian, row-major)

    :param frames: Frame matrix, shape (T, d).
    :param segment_id: Identifier of the segment the frames belong to.
    """

    frames: np.ndarray
    segment_id: int
    MAGIC: typing.ClassVar[bytes] = b'FEA1'

    def __init__(self, frames: typing.Any, segment_id: int = 0) -> None:
        array = util.freeze_array(frames, dtype=np.float32)
        if array.ndim != 2:
            raise errors.DimensionMismatchError(f'Expected a T x d matrix, got shape {array.shape}.')
        if not np.all(np.isfinite(array)):
            raise errors.ValidationError(f'Segment {segment_id} has NaN or infinite features.')
        self._set('frames', array)
        self._set('segment_id', segment_id)

    def __len__(self) -> int:
        return int(self.frames.shape[0])

    @property
    def dimension(self) -> int:
        """Get the feature dimension d."""
        return int(self.frames.shape[1])

    @classmethod
    def empty(cls, dimension: int, segment_id: int = 0) -> FeatureMatrix:
        """Create a matrix with zero frames."""
        return cls(np.zeros((0, dimension), dtype=np.float32), segment_id)

    def split(self, index: int) -> typing.Tuple[FeatureMatrix, FeatureMatrix]:
        """Split into frames [0, index) and [index, T)."""

        head = FeatureMatrix(self.frames[:index], self.segment_id)
        tail = FeatureMatrix(self.frames[index:], self.segment_id)
        return head, tail

    def to_binary(self) -> bytes:
        count, dimension = self.frames.shape
        header = self.MAGIC + util.u32_to_binary(count) + util.u32_to_binary(dimension)
        return header + util.f32_matrix_to_binary(self.frames)

    @classmethod
    def create_from_binary(cls, data: bytes, segment_id: int = 0) -> FeatureMatrix:
        payload = cls.check_magic(data)
        header_size = 2 * util.U32_BYTES
        if len(payload) < header_size:
            raise errors.DimensionMismatchError('Truncated feature header.')
        count, dimension = util.u32_iter_from_binary(payload[:header_size])
        frames = util.f32_matrix_from_binary(payload[header_size:], count, dimension)
        return cls(frames, segment_id)
