"""
    codebook
    ========

    Vector quantization: seeded k-means codebook training, nearest-centroid
    quantization and normalized codeword histograms.

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
import os
import typing

import numpy as np
from scipy.spatial.distance import cdist
from sklearn.cluster import kmeans_plusplus

from . import audio_io
from .. import errors
from .. import models
from .. import util

__all__ = [
    'build_histogram',
    'default_codebook_size',
    'merge_histograms',
    'quantize',
    'read_codebook',
    'segment_histograms',
    'train_codebook',
    'write_codebook',
]

logger = logging.getLogger(__name__)

MAX_CODEBOOK_SIZE = 1024
FRAMES_PER_CODEWORD = 10
MAX_ITERATIONS = 50
TOLERANCE = 1e-4
CHUNK_ROWS = 8192
FramesType = typing.Union[models.FeatureMatrix, np.ndarray]


def as_frames(frames: FramesType) -> np.ndarray:
    return np.asarray(getattr(frames, 'frames', frames), dtype=np.float64)


def default_codebook_size(n_segments: int, n_frames: int) -> int:
    """Get K = min(n_segments, 1024, n_frames // 10), at least 1."""
    return max(1, min(n_segments, MAX_CODEBOOK_SIZE, n_frames // FRAMES_PER_CODEWORD))


def nearest(x: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """Get the nearest centroid of every row, lowest index on ties."""

    labels = np.empty(x.shape[0], dtype=np.intp)
    for start in range(0, x.shape[0], CHUNK_ROWS):
        block = cdist(x[start:start + CHUNK_ROWS], centroids, 'sqeuclidean')
        rows = np.argmin(block, axis=1)
        labels[start:start + rows.size] = rows
    return labels


def reseed_empty(x: np.ndarray, labels: np.ndarray, centroids: np.ndarray, size: int) -> np.ndarray:
    """Move the farthest point of the largest cluster into every empty cluster."""

    counts = np.bincount(labels, minlength=size)
    for empty in np.flatnonzero(counts == 0):
        largest = int(np.argmax(counts))
        members = np.flatnonzero(labels == largest)
        spread = np.sum((x[members] - centroids[largest]) ** 2, axis=1)
        farthest = members[int(np.argmax(spread))]
        labels[farthest] = empty
        counts[largest] -= 1
        counts[empty] += 1
        logger.debug('Reseeded empty codeword %d from codeword %d', empty, largest)
    return labels


def train_codebook(
    all_frames: FramesType,
    size: int,
    seed: int = 0,
    max_iterations: int = MAX_ITERATIONS,
    tolerance: float = TOLERANCE,
) -> models.Codebook:
    """
    Train K centroids with k-means++ initialization and Lloyd iterations.

    Iteration stops after `max_iterations` or once the relative inertia
    improvement falls below `tolerance`.

    :param all_frames: Pooled frames of the recording, shape (n, d).
    :param size: Codeword count K.
    :param seed: Initialization seed.
    :raises TooFewFramesError: Fewer distinct frames than codewords.
    """

    x = as_frames(all_frames)
    if size < 1:
        raise errors.ValidationError(f'Codebook size must be at least 1, got {size}.')
    if x.shape[0] < size or np.unique(x, axis=0).shape[0] < size:
        raise errors.TooFewFramesError(f'{x.shape[0]} frames cannot train {size} distinct codewords.')

    centroids, _ = kmeans_plusplus(x, n_clusters=size, random_state=seed)
    history: typing.List[float] = []
    for _ in range(max_iterations):
        labels = nearest(x, centroids)
        labels = reseed_empty(x, labels, centroids, size)
        counts = np.bincount(labels, minlength=size)
        sums = np.stack([np.bincount(labels, weights=i, minlength=size) for i in x.T], axis=1)
        centroids = sums / counts[:, None]
        inertia = float(np.sum((x - centroids[labels]) ** 2))
        if history:
            previous = history[-1]
            assert inertia <= previous + 1e-9 * max(previous, 1.0), 'k-means inertia increased'
        history.append(inertia)
        if len(history) > 1 and history[-2] - inertia <= tolerance * history[-2]:
            break

    logger.info('Trained %d codewords in %d iterations, inertia %.6g', size, len(history), history[-1])
    return models.Codebook(centroids, seed, history)


def quantize(frames: FramesType, cb: models.Codebook) -> np.ndarray:
    """
    Map every frame to its nearest centroid (Euclidean), lowest index on ties.

    :raises DimensionMismatchError: Frame and codebook dimensions differ.
    """

    x = as_frames(frames)
    if x.ndim != 2 or x.shape[1] != cb.dimension:
        raise errors.DimensionMismatchError(f'Frames of shape {x.shape} against d = {cb.dimension}.')
    if x.shape[0] == 0:
        return np.zeros(0, dtype=np.intp)
    return nearest(x, cb.centroids.astype(np.float64))


def build_histogram(indices: typing.Any, size: int, segment_id: int = 0) -> models.HistogramVec:
    """
    Count codeword occurrences and divide by the sequence length.

    :raises EmptySegmentError: Empty sequence.
    """

    indices = np.asarray(indices, dtype=np.intp)
    if indices.size == 0:
        raise errors.EmptySegmentError(f'Segment {segment_id} has no frames to count.')
    if indices.min() < 0 or indices.max() >= size:
        raise errors.ValidationError(f'Codeword index outside [0, {size}).')
    counts = np.bincount(indices, minlength=size)
    return models.HistogramVec(counts / indices.size, segment_id)


def merge_histograms(
    a: models.HistogramVec,
    n_a: int,
    b: models.HistogramVec,
    n_b: int,
) -> models.HistogramVec:
    """
    Pool two histograms, weighting each by its frame count.

    The result keeps the lower segment id. A zero-count operand leaves
    the other unchanged.
    """

    if len(a) != len(b):
        raise errors.DimensionMismatchError(f'Cannot merge K = {len(a)} with K = {len(b)}.')
    if n_a == 0 and n_b == 0:
        raise errors.EmptySegmentError('Both histograms are empty.')
    if n_b == 0:
        return a
    if n_a == 0:
        return b
    weights = (n_a * a.weights + n_b * b.weights) / (n_a + n_b)
    return models.HistogramVec(weights, min(a.segment_id, b.segment_id))


def segment_histograms(
    segments: typing.Sequence[models.FeatureMatrix],
    cb: models.Codebook,
    threads: int = 1,
) -> typing.List[models.HistogramVec]:
    """Quantize every segment and build its histogram, in segment order."""

    def histogram(matrix: models.FeatureMatrix) -> models.HistogramVec:
        return build_histogram(quantize(matrix, cb), cb.size, matrix.segment_id)

    return util.map_ordered(histogram, segments, threads)


def write_codebook(path: audio_io.PathType, cb: models.Codebook) -> None:
    """Write a codebook in the "VQCB" format."""

    try:
        with open(path, 'wb') as f:
            f.write(cb.to_binary())
    except OSError as error:
        raise errors.IoError(f'Cannot write codebook ({error.strerror})', os.fspath(path))


def read_codebook(path: audio_io.PathType) -> models.Codebook:
    """Read a codebook in the "VQCB" format."""

    try:
        with open(path, 'rb') as f:
            data = f.read()
    except OSError as error:
        raise errors.IoError(f'Cannot read codebook ({error.strerror})', os.fspath(path))
    return models.Codebook.create_from_binary(data)
