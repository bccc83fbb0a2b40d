"""
    synth
    =====

    Synthetic multi-speaker feature sets with known ground truth.

    Every speaker is a Gaussian with a random mean and a random full
    covariance; segments are drawn from one speaker each and laid end to
    end at 10 ms per frame.

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
import fractions
import logging
import typing

import numpy as np

from .. import models

__all__ = [
    'speaker_label',
    'synthesize',
]

logger = logging.getLogger(__name__)

FRAMES_PER_SECOND = 100
SynthResult = typing.Tuple[typing.List[models.FeatureMatrix], typing.List[models.SegmentSpan]]


def speaker_label(index: int) -> str:
    return f'spk{index:03d}'


def random_covariance(rng: np.random.Generator, dimension: int) -> np.ndarray:
    """Draw an SPD matrix with trace d, i.e. unit average variance."""

    basis = rng.standard_normal((dimension, dimension))
    cov = basis @ basis.T / dimension + 0.1 * np.eye(dimension)
    return cov * (dimension / np.trace(cov))


def synthesize(spec: models.SynthSpec) -> SynthResult:
    """
    Generate segments and their labeled spans, fully determined by the seed.

    :return: Feature matrices with ids 0..n-1 and the matching spans.
    """

    rng = np.random.default_rng(spec.seed)
    d = spec.dimension
    means = spec.spread * rng.standard_normal((spec.n_speakers, d))
    factors = [np.linalg.cholesky(random_covariance(rng, d)) for _ in range(spec.n_speakers)]
    lengths = rng.integers(spec.min_frames, spec.max_frames + 1, size=spec.n_segments)
    speakers = rng.permutation(np.repeat(np.arange(spec.n_speakers), spec.segments_per_speaker))

    matrices = []
    spans = []
    offset = 0
    for segment_id, (speaker, length) in enumerate(zip(speakers.tolist(), lengths.tolist())):
        noise = rng.standard_normal((length, d))
        frames = means[speaker] + noise @ factors[speaker].T
        matrices.append(models.FeatureMatrix(frames, segment_id))
        start = fractions.Fraction(offset, FRAMES_PER_SECOND)
        end = fractions.Fraction(offset + length, FRAMES_PER_SECOND)
        spans.append(models.SegmentSpan(segment_id, start, end, speaker_label(speaker)))
        offset += length

    logger.info(
        'Synthesized %d segments of %d speakers, d = %d, spread %g',
        len(matrices), spec.n_speakers, d, spec.spread,
    )
    return matrices, spans
