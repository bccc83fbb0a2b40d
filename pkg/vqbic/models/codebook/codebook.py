"""
    codebook
    ========

    Vector-quantization codebook trained on the pooled frames of a
    recording.

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

__all__ = ['Codebook']


@util.dataclass(frozen=True)
class Codebook(util.Binary):
    """
    K x d matrix of codeword centroids.

    The binary format stores only the centroids, so a codebook loaded
    from a cache file has seed 0 and no training history.

    Binary Format:
        .. code-block:: text

            magic: "VQCB"
            K: uint32 (little-endian)
            d: uint32 (little-endian)
            centroids: float32[K * d] (little-endian, row-major)

    :param centroids: Codeword matrix, shape (K, d).
    :param train_seed: Seed used for k-means++ initialization.
    :param inertia_history: Within-cluster sum of squares after each Lloyd iteration.
    """

    centroids: np.ndarray
    train_seed: int
    inertia_history: typing.Tuple[float, ...]
    MAGIC: typing.ClassVar[bytes] = b'VQCB'

    def __init__(
        self,
        centroids: typing.Any,
        train_seed: int = 0,
        inertia_history: typing.Sequence[float] = (),
    ) -> None:
        array = util.freeze_array(centroids, dtype=np.float32)
        if array.ndim != 2 or array.shape[0] < 1:
            raise errors.DimensionMismatchError(f'Expected a K x d matrix with K >= 1, got {array.shape}.')
        if not np.all(np.isfinite(array)):
            raise errors.ValidationError('Codebook has NaN or infinite centroids.')
        if np.unique(array, axis=0).shape[0] != array.shape[0]:
            raise errors.ValidationError('Codebook has duplicate centroids.')
        self._set('centroids', array)
        self._set('train_seed', int(train_seed))
        self._set('inertia_history', tuple(float(i) for i in inertia_history))

    def __len__(self) -> int:
        return int(self.centroids.shape[0])

    @property
    def size(self) -> int:
        """Get the codeword count K."""
        return len(self)

    @property
    def dimension(self) -> int:
        """Get the feature dimension d."""
        return int(self.centroids.shape[1])

    @property
    def iterations(self) -> int:
        """Get the number of Lloyd iterations run in training."""
        return len(self.inertia_history)

    def to_binary(self) -> bytes:
        size, dimension = self.centroids.shape
        header = self.MAGIC + util.u32_to_binary(size) + util.u32_to_binary(dimension)
        return header + util.f32_matrix_to_binary(self.centroids)

    @classmethod
    def create_from_binary(cls, data: bytes) -> Codebook:
        payload = cls.check_magic(data)
        header_size = 2 * util.U32_BYTES
        if len(payload) < header_size:
            raise errors.DimensionMismatchError('Truncated codebook header.')
        size, dimension = util.u32_iter_from_binary(payload[:header_size])
        centroids = util.f32_matrix_from_binary(payload[header_size:], size, dimension)
        return cls(centroids)
