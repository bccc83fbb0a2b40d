"""
    threshold
    =========

    Online estimation of the ΔBIC tuning parameter from the segments
    being clustered.

    Each segment is assumed speaker-homogeneous, so splitting it in two
    must not look like a speaker change: λ has to exceed the segment's
    split bound (see `bic.split_bound`). The estimate combines the mean
    and spread of those bounds, λ_act = α·λ̄ + β·σ.

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
import logging
import math
import typing

import numpy as np

from . import bic
from . import gaussian_stats
from .. import errors
from .. import models
from .. import util

__all__ = [
    'estimate_lambda',
    'segment_lambda_bound',
    'split_segment',
]

logger = logging.getLogger(__name__)

TRIM_FRACTION = 0.05
OptionalFloat = typing.Optional[float]
SplitType = typing.Tuple[models.SegmentStats, models.SegmentStats, models.SegmentStats]


def segment_lambda_bound(
    s_full: models.SegmentStats,
    s_left: models.SegmentStats,
    s_right: models.SegmentStats,
    d: int,
    ridge: OptionalFloat = None,
) -> float:
    """
    Get the smallest λ that keeps a segment's two halves merged.

    :raises HalfTooShortError: A half has fewer than d + 1 frames.
    :raises DegenerateCovarianceError: A covariance cannot be factored.
    """

    for stats in (s_full, s_left, s_right):
        if stats.dimension != d:
            raise errors.DimensionMismatchError(f'Statistics of d = {stats.dimension}, expected {d}.')
    if min(s_left.n, s_right.n) < d + 1:
        raise errors.HalfTooShortError(
            f'Halves of {s_left.n} and {s_right.n} frames, need at least {d + 1}.'
        )
    return bic.split_bound(s_full, s_left, s_right, ridge)


def split_segment(frames: models.FeatureMatrix) -> SplitType:
    """
    Split a segment at frame floor(T / 2).

    :return: Statistics of the whole segment, the left half and the right half.
    :raises HalfTooShortError: A half has fewer than d + 1 frames.
    """

    count = len(frames)
    middle = count // 2
    if min(middle, count - middle) < frames.dimension + 1:
        raise errors.HalfTooShortError(
            f'Segment {frames.segment_id} has {count} frames, too few to split at d = {frames.dimension}.'
        )
    head, tail = frames.split(middle)
    left = gaussian_stats.accumulate(head)
    right = gaussian_stats.accumulate(tail)
    return gaussian_stats.merge(left, right), left, right


def usable_bound(frames: models.FeatureMatrix, ridge: OptionalFloat) -> OptionalFloat:
    """Get a segment's bound, or None (with a warning) if it cannot be split."""

    try:
        full, left, right = split_segment(frames)
        return segment_lambda_bound(full, left, right, frames.dimension, ridge)
    except (errors.HalfTooShortError, errors.DegenerateCovarianceError) as error:
        logger.warning('Skipping segment %d for threshold estimation: %s', frames.segment_id, error)
        return None


def trim_largest(bounds: np.ndarray) -> np.ndarray:
    """Drop the largest 5% of bounds, keeping the others in order."""

    count = int(math.floor(TRIM_FRACTION * bounds.size))
    if count == 0:
        return bounds
    order = np.argsort(bounds, kind='stable')
    keep = np.sort(order[:bounds.size - count])
    return bounds[keep]


def estimate_lambda(
    segments: typing.Sequence[models.FeatureMatrix],
    alpha: float = 2.0,
    beta: float = 0.5,
    trim_outliers: bool = False,
    threads: int = 1,
    ridge: OptionalFloat = None,
) -> models.ThresholdEstimate:
    """
    Estimate λ_act = α·λ̄ + β·σ from the split bounds of the segments.

    σ is the population standard deviation. Both reductions are exactly
    rounded sums, so the estimate does not depend on segment order.

    :param segments: Segments to be clustered.
    :param alpha: Weight of the mean bound.
    :param beta: Weight of the bound spread.
    :param trim_outliers: Drop the largest 5% of bounds first.
    :param threads: Worker cap for the per-segment bounds.
    :raises TooFewUsableSegmentsError: Fewer than two segments could be split.
    :raises ThresholdError: Estimate is not positive.
    """

    results = util.map_ordered(lambda i: usable_bound(i, ridge), segments, threads)
    skipped = [i.segment_id for i, j in zip(segments, results) if j is None]
    bounds = np.array([j for j in results if j is not None], dtype=np.float64)
    if bounds.size < 2:
        raise errors.TooFewUsableSegmentsError(
            f'{bounds.size} of {len(segments)} segments are long enough to estimate lambda.'
        )
    if trim_outliers:
        bounds = trim_largest(bounds)

    # Shifted by the minimum, so equal bounds give their exact value.
    shift = float(bounds.min())
    lambda_bar = shift + math.fsum(bounds - shift) / bounds.size
    sigma = math.sqrt(math.fsum((bounds - lambda_bar) ** 2) / bounds.size)
    lambda_act = alpha * lambda_bar + beta * sigma
    logger.info(
        'Estimated lambda %.6g from %d segments (mean %.6g, std %.6g, %d skipped)',
        lambda_act, bounds.size, lambda_bar, sigma, len(skipped),
    )
    return models.ThresholdEstimate(
        bounds, lambda_bar, sigma, lambda_act, alpha, beta, skipped, trim_outliers,
    )
