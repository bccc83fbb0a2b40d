"""
    clustering
    ==========

    Agglomerative speaker clustering, one merge per iteration.

    Two strategies share the same ΔBIC code path:

        baseline: ΔBIC over every pair of current clusters.
        two-stage: rank all pairs by cosine distance between codeword
            histograms, then score only the N closest with ΔBIC.

    Both merge the pair with the largest positive ΔBIC and stop when there
    is none. Ties go to the lowest (id_a, id_b), and the surviving cluster
    keeps the lower id.

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
import time
import typing

import numpy as np

from . import bic
from . import codebook
from . import gaussian_stats
from . import threshold
from .. import errors
from .. import models

__all__ = [
    'cluster',
    'cluster_baseline',
    'cluster_two_stage',
    'cosine_distance',
    'train_segment_codebook',
]

logger = logging.getLogger(__name__)

PAIR_CHUNK = 2048
OptionalFloat = typing.Optional[float]
OptionalCodebook = typing.Optional[models.Codebook]
Segments = typing.Sequence[models.FeatureMatrix]


def cosine_distance(a: models.HistogramVec, b: models.HistogramVec) -> float:
    """
    Get 1 - a.b / (|a| |b|), clipped to [0, 1].

    :raises ZeroVectorError: Either histogram has no mass.
    """

    if len(a) != len(b):
        raise errors.DimensionMismatchError(f'Cannot compare K = {len(a)} with K = {len(b)}.')
    if a.is_zero or b.is_zero:
        raise errors.ZeroVectorError('Cosine distance of a zero histogram.')
    norm = np.linalg.norm(a.weights) * np.linalg.norm(b.weights)
    return float(np.clip(1.0 - np.dot(a.weights, b.weights) / norm, 0.0, 1.0))


def prepare(segments: Segments) -> typing.List[models.FeatureMatrix]:
    """Validate segments and sort them by id."""

    if not segments:
        raise errors.ValidationError('Nothing to cluster.')
    ordered = sorted(segments, key=lambda i: i.segment_id)
    ids = [i.segment_id for i in ordered]
    if len(set(ids)) != len(ids):
        raise errors.ValidationError('Segment ids are not unique.')
    dimensions = {i.dimension for i in ordered}
    if len(dimensions) != 1:
        raise errors.DimensionMismatchError(f'Segments have mixed dimensions {sorted(dimensions)}.')
    for matrix in ordered:
        if len(matrix) == 0:
            raise errors.EmptySegmentError(f'Segment {matrix.segment_id} has no frames.')
    return ordered


class MergeEngine:
    """
    Mutable clustering state over fixed slots, one slot per initial segment.

    Slot order equals segment-id order and a merge keeps the lower slot,
    so enumerating active slot pairs in order gives lexicographic
    (id_a, id_b) order.
    """

    __slots__ = (
        'ids',
        'members',
        'n',
        'sums',
        'scatters',
        'half',
        'active',
        'lambda_',
        'ridge',
        'bic_evals',
        'merge_log',
    )

    def __init__(self, segments: Segments, lambda_: float, ridge: OptionalFloat = None) -> None:
        stats = [gaussian_stats.accumulate(i) for i in segments]
        self.ids = [i.segment_id for i in segments]
        self.members = [[i] for i in self.ids]
        self.n, self.sums, self.scatters = gaussian_stats.stack_stats(stats)
        self.half = gaussian_stats.half_log_det_batch(self.n, self.sums, self.scatters, ridge)
        self.active = list(range(len(segments)))
        self.lambda_ = lambda_
        self.ridge = ridge
        self.bic_evals = 0
        self.merge_log: typing.List[models.MergeRecord] = []

    @property
    def iteration(self) -> int:
        return len(self.merge_log)

    def pairs(self) -> typing.Tuple[np.ndarray, np.ndarray]:
        """Get all active slot pairs in lexicographic order."""

        slots = np.array(self.active, dtype=np.intp)
        first, second = np.triu_indices(slots.size, 1)
        return slots[first], slots[second]

    def evaluate(self, first: np.ndarray, second: np.ndarray, counted: bool = True) -> np.ndarray:
        """Get ΔBIC of slot pairs."""

        values = np.empty(first.size)
        for start in range(0, first.size, PAIR_CHUNK):
            stop = start + PAIR_CHUNK
            values[start:stop] = bic.pairwise_delta_bic(
                self.n, self.sums, self.scatters, self.half,
                first[start:stop], second[start:stop], self.lambda_, self.ridge,
            )
        if counted:
            self.bic_evals += first.size
        return values

    def merge(self, a: int, b: int, value: float, rank: typing.Optional[int] = None) -> None:
        """Fold slot `b` into slot `a` and log the merge."""

        assert a < b
        self.merge_log.append(models.MergeRecord(self.iteration, self.ids[a], self.ids[b], value, rank))
        self.n[a] += self.n[b]
        self.sums[a] = self.sums[a] + self.sums[b]
        self.scatters[a] = self.scatters[a] + self.scatters[b]
        self.half[a] = gaussian_stats.half_log_det_batch(
            self.n[a:a + 1], self.sums[a:a + 1], self.scatters[a:a + 1], self.ridge,
        )[0]
        self.members[a].extend(self.members[b])
        self.members[b] = []
        self.active.remove(b)
        logger.debug(
            'Merge %d: %d <- %d, delta BIC %.6g, rank %s',
            self.iteration - 1, self.ids[a], self.ids[b], value, rank,
        )
        assert sum(len(self.members[i]) for i in self.active) == len(self.ids)

    def clusters(self, histograms: typing.Optional[typing.Sequence] = None) -> typing.List[models.Cluster]:
        result = []
        for slot in self.active:
            stats = models.SegmentStats(int(self.n[slot]), self.sums[slot], self.scatters[slot])
            histogram = None if histograms is None else histograms[slot]
            result.append(models.Cluster(self.ids[slot], self.members[slot], stats, histogram))
        return result


def cluster_baseline(segments: Segments, lambda_: float, ridge: OptionalFloat = None) -> models.ClusterState:
    """
    Merge the pair with the largest positive ΔBIC over all pairs until none is positive.

    :param segments: Speaker-homogeneous segments.
    :param lambda_: ΔBIC tuning parameter.
    """

    ordered = prepare(segments)
    engine = MergeEngine(ordered, lambda_, ridge)
    while len(engine.active) > 1:
        first, second = engine.pairs()
        values = engine.evaluate(first, second)
        best = int(np.argmax(values))
        if not values[best] > 0:
            break
        engine.merge(int(first[best]), int(second[best]), float(values[best]))

    logger.info(
        'Baseline clustering: %d segments -> %d clusters, %d BIC evaluations',
        len(ordered), len(engine.active), engine.bic_evals,
    )
    return models.ClusterState(
        engine.clusters(),
        engine.merge_log,
        0,
        engine.bic_evals,
        models.ClusterMode.BASELINE,
        lambda_,
    )


def cosine_matrix(weights: np.ndarray, norms: np.ndarray) -> np.ndarray:
    """Get the symmetric matrix of cosine distances, built from its upper triangle."""

    upper = np.triu(1.0 - (weights @ weights.T) / np.outer(norms, norms), 1)
    return np.clip(upper + upper.T, 0.0, 1.0)


def train_segment_codebook(segments: Segments, cfg: models.ClusterConfig) -> models.Codebook:
    """
    Train the codebook on the pooled frames of all segments.

    An automatic size is capped at the number of distinct frames; an
    explicit `cfg.codebook_size` is used as given.

    :raises TooFewFramesError: Explicit size exceeds the distinct frames.
    """

    pooled = np.concatenate([i.frames for i in segments])
    size = cfg.codebook_size
    if size is None:
        size = codebook.default_codebook_size(len(segments), pooled.shape[0])
        distinct = np.unique(pooled, axis=0).shape[0]
        if distinct < size:
            logger.info('Codebook size capped from %d to %d distinct frames', size, distinct)
            size = distinct
    return codebook.train_codebook(pooled, size, cfg.seed)


def resolve_lambda(segments: Segments, cfg: models.ClusterConfig) -> typing.Tuple[float, typing.Any]:
    """Get λ from the configuration, estimating it from the segments when automatic."""

    if cfg.lambda_ is not None:
        return cfg.lambda_, None
    estimate = threshold.estimate_lambda(segments, cfg.alpha, cfg.beta, cfg.trim_outliers, cfg.threads)
    return estimate.lambda_act, estimate


def cluster_two_stage(
    segments: Segments,
    cfg: models.ClusterConfig,
    lambda_: OptionalFloat = None,
    cb: OptionalCodebook = None,
) -> models.ClusterState:
    """
    Cosine fast-match over codeword histograms, then ΔBIC on the N closest pairs.

    Stops as soon as none of the N closest pairs has a positive ΔBIC;
    the remaining pairs are not rescanned.

    :param segments: Speaker-homogeneous segments.
    :param cfg: Clustering configuration (N, λ, seed, codebook size, audit).
    :param lambda_: (Optional) λ overriding the configuration.
    :param cb: (Optional) pre-trained codebook.
    """

    ordered = prepare(segments)
    if lambda_ is None:
        lambda_, _ = resolve_lambda(ordered, cfg)
    if cb is None:
        cb = train_segment_codebook(ordered, cfg)

    engine = MergeEngine(ordered, lambda_)
    histograms: typing.List[typing.Any] = codebook.segment_histograms(ordered, cb, cfg.threads)
    weights = np.stack([i.weights for i in histograms])
    norms = np.linalg.norm(weights, axis=1)
    distances = cosine_matrix(weights, norms)
    count = len(ordered)
    cosine_evals = count * (count - 1) // 2
    audit_checks = audit_hits = 0
    stopped = False

    while len(engine.active) > 1:
        first, second = engine.pairs()
        ranking = np.argsort(distances[first, second], kind='stable')
        shortlist = ranking[:cfg.n_best]
        values = engine.evaluate(first[shortlist], second[shortlist])

        if cfg.audit_fast_match:
            optimum = int(np.argmax(engine.evaluate(first, second, counted=False)))
            audit_checks += 1
            audit_hits += int(np.any(shortlist == optimum))

        peak = values.max()
        if not peak > 0:
            stopped = shortlist.size < first.size
            if stopped:
                logger.warning(
                    'No positive delta BIC among the %d closest of %d pairs, stopping without a rescan',
                    shortlist.size, first.size,
                )
            break

        chosen = int(shortlist[values == peak].min())
        rank = int(np.flatnonzero(shortlist == chosen)[0])
        a, b = int(first[chosen]), int(second[chosen])
        merged = codebook.merge_histograms(histograms[a], int(engine.n[a]), histograms[b], int(engine.n[b]))
        engine.merge(a, b, float(values[rank]), rank)

        histograms[a], histograms[b] = merged, None
        weights[a] = merged.weights
        norms[a] = np.linalg.norm(merged.weights)
        others = np.array([i for i in engine.active if i != a], dtype=np.intp)
        if others.size:
            row = np.clip(1.0 - (weights[others] @ weights[a]) / (norms[others] * norms[a]), 0.0, 1.0)
            distances[a, others] = row
            distances[others, a] = row
            cosine_evals += others.size

    logger.info(
        'Two-stage clustering: %d segments -> %d clusters, %d cosine and %d BIC evaluations',
        count, len(engine.active), cosine_evals, engine.bic_evals,
    )
    audit = (audit_checks, audit_hits) if cfg.audit_fast_match else (None, None)
    return models.ClusterState(
        engine.clusters(histograms),
        engine.merge_log,
        cosine_evals,
        engine.bic_evals,
        models.ClusterMode.TWO_STAGE,
        lambda_,
        stopped,
        *audit,
    )


def cluster(segments: Segments, cfg: models.ClusterConfig) -> models.RunReport:
    """
    Cluster segments with the configured strategy.

    Resolves an automatic λ through `threshold.estimate_lambda` and an
    automatic codebook size through `codebook.default_codebook_size`.

    :return: Report holding the final state, the λ estimate and the wall time.
    """

    start = time.perf_counter()
    ordered = prepare(segments)
    lambda_, estimate = resolve_lambda(ordered, cfg)
    size = None
    if cfg.mode is models.ClusterMode.BASELINE:
        state = cluster_baseline(ordered, lambda_)
    else:
        cb = train_segment_codebook(ordered, cfg)
        size = cb.size
        state = cluster_two_stage(ordered, cfg, lambda_, cb)
    elapsed = time.perf_counter() - start
    return models.RunReport(state, cfg, size, estimate, elapsed)
