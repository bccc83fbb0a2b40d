"""
    gaussian_stats
    ==============

    Full-covariance Gaussian sufficient statistics with exact merging and
    Cholesky log-determinants.

    All log-determinants, single or batched, go through
    `half_log_det_batch`, so a matrix gives the same bits whichever batch
    it is evaluated in.

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

from .. import errors
from .. import models

__all__ = [
    'accumulate',
    'empty_stats',
    'half_log_det_batch',
    'half_log_det_terms',
    'log_det_batch',
    'log_det_cov',
    'merge',
    'stack_stats',
]

RIDGE_SCALE = 1e-6
RIDGE_FLOOR = 1e-10
OptionalFloat = typing.Optional[float]
FramesType = typing.Union[models.FeatureMatrix, np.ndarray]
StackedStats = typing.Tuple[np.ndarray, np.ndarray, np.ndarray]


def accumulate(frames: FramesType) -> models.SegmentStats:
    """
    Accumulate n, sum and scatter of a frame matrix in 64-bit floats.

    :raises EmptySegmentError: No frames.
    """

    x = np.asarray(getattr(frames, 'frames', frames), dtype=np.float64)
    if x.ndim != 2 or x.shape[0] == 0:
        raise errors.EmptySegmentError(f'Cannot accumulate frames of shape {x.shape}.')
    scatter = x.T @ x
    return models.SegmentStats(x.shape[0], x.sum(axis=0), 0.5 * (scatter + scatter.T))


def empty_stats(dimension: int) -> models.SegmentStats:
    """Get the identity element of `merge`."""
    return models.SegmentStats(0, np.zeros(dimension), np.zeros((dimension, dimension)))


def merge(a: models.SegmentStats, b: models.SegmentStats) -> models.SegmentStats:
    """Pool two sets of statistics by fieldwise addition."""

    if a.dimension != b.dimension:
        raise errors.DimensionMismatchError(f'Cannot merge d = {a.dimension} with d = {b.dimension}.')
    return models.SegmentStats(a.n + b.n, a.sum + b.sum, a.scatter + b.scatter)


def stack_stats(stats: typing.Sequence[models.SegmentStats]) -> StackedStats:
    """Stack statistics into arrays of shape (B,), (B, d) and (B, d, d)."""

    n = np.array([i.n for i in stats], dtype=np.int64)
    sums = np.stack([i.sum for i in stats])
    scatters = np.stack([i.scatter for i in stats])
    return n, sums, scatters


def log_det_batch(
    n: np.ndarray,
    sums: np.ndarray,
    scatters: np.ndarray,
    ridge: OptionalFloat = None,
) -> np.ndarray:
    """
    Log-determinants of the ridged MLE covariances of a batch of statistics.

    The default ridge is 1e-6 * trace / d per matrix, floored at 1e-10.

    :raises NotPosDefError: A covariance is not positive definite after the ridge.
    """

    if np.any(n < 1):
        raise errors.EmptySegmentError('Log-determinant of empty statistics.')
    count = n.astype(np.float64)
    mean = sums / count[:, None]
    cov = scatters / count[:, None, None] - mean[:, :, None] * mean[:, None, :]
    dimension = cov.shape[-1]
    if ridge is None:
        trace = np.trace(cov, axis1=1, axis2=2)
        weights = np.maximum(RIDGE_SCALE * trace / dimension, RIDGE_FLOOR)
    else:
        if ridge < 0:
            raise errors.ValidationError(f'Ridge must be non-negative, got {ridge}.')
        weights = np.full(cov.shape[0], float(ridge))
    cov = cov + weights[:, None, None] * np.eye(dimension)

    try:
        factor = np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        raise errors.NotPosDefError('Covariance is not positive definite after regularization.')
    diagonal = np.ascontiguousarray(np.diagonal(factor, axis1=1, axis2=2))
    return 2.0 * np.sum(np.log(diagonal), axis=1)


def half_log_det_batch(
    n: np.ndarray,
    sums: np.ndarray,
    scatters: np.ndarray,
    ridge: OptionalFloat = None,
) -> np.ndarray:
    """Get 0.5 * n * log|Σ| for a batch of statistics."""
    return 0.5 * n.astype(np.float64) * log_det_batch(n, sums, scatters, ridge)


def half_log_det_terms(
    stats: typing.Sequence[models.SegmentStats],
    ridge: OptionalFloat = None,
) -> np.ndarray:
    """Get 0.5 * n * log|Σ| for every element of a sequence of statistics."""
    return half_log_det_batch(*stack_stats(stats), ridge=ridge)


def log_det_cov(s: models.SegmentStats, ridge: OptionalFloat = None) -> float:
    """
    Get the log-determinant of the ridged MLE covariance.

    :param s: Statistics with n >= 1.
    :param ridge: Diagonal loading, None for the trace-relative default.
    :raises NotPosDefError: Covariance is degenerate even after the ridge.
    """

    if s.n < 1:
        raise errors.EmptySegmentError('Log-determinant of empty statistics.')
    return float(log_det_batch(*stack_stats([s]), ridge=ridge)[0])
