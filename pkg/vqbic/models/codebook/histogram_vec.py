"""
    histogram_vec
    =============

    Normalized codeword-frequency vector of a segment or cluster.

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
import math
import typing

import numpy as np

from ... import errors
from ... import util

__all__ = ['HistogramVec']

SUM_TOLERANCE = 1e-9


@util.dataclass(frozen=True)
class HistogramVec:
    """
    Codeword frequencies normalized to sum to one.

    :param weights: Non-negative frequencies, shape (K,).
    :param segment_id: Segment (or surviving cluster) identifier.
    """

    weights: np.ndarray
    segment_id: int

    def __init__(self, weights: typing.Any, segment_id: int = 0) -> None:
        array = util.freeze_array(weights, dtype=np.float64)
        if array.ndim != 1 or array.size < 1:
            raise errors.DimensionMismatchError(f'Expected a K-vector, got shape {array.shape}.')
        if not np.all(np.isfinite(array)) or np.any(array < 0):
            raise errors.ValidationError('Histogram weights must be finite and non-negative.')
        total = math.fsum(array)
        if total != 0 and abs(total - 1.0) > SUM_TOLERANCE:
            raise errors.ValidationError(f'Histogram weights sum to {total}, expected 1.')
        self._set('weights', array)
        self._set('segment_id', segment_id)

    def __len__(self) -> int:
        return int(self.weights.size)

    @property
    def is_zero(self) -> bool:
        """Determine if the histogram has no mass."""
        return not np.any(self.weights)
