"""
    bic
    ===

    ΔBIC merge criterion between two Gaussian models.

    The sign convention makes a positive ΔBIC mean that the two sets of
    frames are better described by a single Gaussian, i.e. merge:

        ΔBIC = ½ n_a log|Σ_a| + ½ n_b log|Σ_b| − ½ n_ab log|Σ_ab| + λ P
        P    = ½ (d + ½ d (d + 1)) log n_ab

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

from . import gaussian_stats
from .. import errors
from .. import models

__all__ = [
    'crossover_lambda',
    'delta_bic',
    'pairwise_delta_bic',
    'penalty',
    'penalty_batch',
    'split_bound',
]

OptionalFloat = typing.Optional[float]


def penalty_batch(dimension: int, n_total: np.ndarray) -> np.ndarray:
    """Evaluate the penalty P for an array of pooled frame counts."""

    n_total = np.asarray(n_total)
    if dimension < 1:
        raise errors.PenaltyDomainError(f'Dimension must be at least 1, got {dimension}.')
    if np.any(n_total < 2):
        raise errors.PenaltyDomainError('Penalty needs at least 2 pooled frames.')
    parameters = 0.5 * (dimension + 0.5 * dimension * (dimension + 1))
    return parameters * np.log(n_total.astype(np.float64))


def penalty(dimension: int, n_total: int) -> float:
    """
    Get P = 0.5 (d + 0.5 d (d + 1)) ln(n_total).

    :raises PenaltyDomainError: n_total < 2 or d < 1.
    """
    return float(penalty_batch(dimension, np.array([n_total]))[0])


def pairwise_delta_bic(
    n: np.ndarray,
    sums: np.ndarray,
    scatters: np.ndarray,
    half_terms: np.ndarray,
    first: np.ndarray,
    second: np.ndarray,
    lambda_: float,
    ridge: OptionalFloat = None,
) -> np.ndarray:
    """
    Evaluate ΔBIC for index pairs over stacked statistics.

    :param n: Frame counts, shape (C,).
    :param sums: Feature sums, shape (C, d).
    :param scatters: Scatter matrices, shape (C, d, d).
    :param half_terms: Cached 0.5 n log|Σ| of every row.
    :param first: Row indices of the first members of the pairs.
    :param second: Row indices of the second members of the pairs.
    :param lambda_: Tuning parameter λ.
    :return: ΔBIC of every pair.
    """

    n_ab = n[first] + n[second]
    merged = gaussian_stats.half_log_det_batch(
        n_ab,
        sums[first] + sums[second],
        scatters[first] + scatters[second],
        ridge,
    )
    return (half_terms[first] + half_terms[second]) - merged + lambda_ * penalty_batch(sums.shape[1], n_ab)


def delta_bic(
    a: models.SegmentStats,
    b: models.SegmentStats,
    p: models.BicParams,
    ridge: OptionalFloat = None,
) -> float:
    """
    Get ΔBIC between two sets of statistics, positive meaning merge.

    :raises DimensionMismatchError: Dimensions differ from each other or from `p`.
    :raises DegenerateCovarianceError: A covariance cannot be factored.
    """

    if a.dimension != p.dimension or b.dimension != p.dimension:
        raise errors.DimensionMismatchError(
            f'Statistics of d = {a.dimension}, {b.dimension} evaluated with d = {p.dimension}.'
        )
    n, sums, scatters = gaussian_stats.stack_stats([a, b])
    half_terms = gaussian_stats.half_log_det_batch(n, sums, scatters, ridge)
    first, second = np.array([0]), np.array([1])
    value = pairwise_delta_bic(n, sums, scatters, half_terms, first, second, p.lambda_, ridge)
    return float(value[0])


def split_bound(
    full: models.SegmentStats,
    left: models.SegmentStats,
    right: models.SegmentStats,
    ridge: OptionalFloat = None,
) -> float:
    """
    Get the smallest λ for which ΔBIC(left, right) would be positive.

    (½ n log|Σ| − ½ n_l log|Σ_l| − ½ n_r log|Σ_r|) / P(d, n)
    """

    if full.n != left.n + right.n:
        raise errors.ValidationError('Halves do not add up to the full segment.')
    half_full, half_left, half_right = gaussian_stats.half_log_det_terms([full, left, right], ridge)
    return float((half_full - half_left - half_right) / penalty(full.dimension, full.n))


def crossover_lambda(
    a: models.SegmentStats,
    b: models.SegmentStats,
    ridge: OptionalFloat = None,
) -> float:
    """Get λ* where the merge decision between `a` and `b` flips."""
    return split_bound(gaussian_stats.merge(a, b), a, b, ridge)
