"""
    segment_stats
    =============

    Full-covariance Gaussian sufficient statistics.

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

__all__ = ['SegmentStats']


@util.dataclass(frozen=True)
class SegmentStats:
    """
    Sufficient statistics (n, Σx, Σxxᵀ) of a set of frames.

    Sums are held in 64-bit floats whatever the feature precision, so
    merging is an exact fieldwise addition of accumulators.

    :param n: Frame count.
    :param sum: Feature sums, shape (d,).
    :param scatter: Summed outer products, shape (d, d).
    """

    n: int
    sum: np.ndarray
    scatter: np.ndarray

    def __init__(self, n: int, sum: typing.Any, scatter: typing.Any) -> None:
        vector = util.freeze_array(sum, dtype=np.float64)
        matrix = util.freeze_array(scatter, dtype=np.float64)
        if n < 0:
            raise errors.ValidationError(f'Frame count must be non-negative, got {n}.')
        if vector.ndim != 1 or matrix.shape != (vector.size, vector.size):
            raise errors.DimensionMismatchError(
                f'Sum shape {vector.shape} does not match scatter shape {matrix.shape}.'
            )
        self._set('n', int(n))
        self._set('sum', vector)
        self._set('scatter', matrix)

    @property
    def dimension(self) -> int:
        """Get the feature dimension d."""
        return int(self.sum.size)

    @property
    def mean(self) -> np.ndarray:
        """Get the sample mean."""

        if self.n == 0:
            raise errors.EmptySegmentError('Mean of empty statistics.')
        return self.sum / self.n

    @property
    def covariance(self) -> np.ndarray:
        """Get the maximum-likelihood covariance scatter/n - mean meanᵀ."""

        mean = self.mean
        return self.scatter / self.n - mean[:, None] * mean[None, :]
