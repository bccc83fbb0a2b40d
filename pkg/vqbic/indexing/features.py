"""
    features
    ========

    MFCC front end: pre-emphasis, Hamming window, power spectrum, mel
    filterbank, log, DCT-II, log frame energy and regression deltas.

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
import functools
import logging
import os
import typing

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy import fft

from . import audio_io
from .. import errors
from .. import models
from .. import util

__all__ = [
    'compute_deltas',
    'extract_features',
    'extract_spans',
    'frame_count',
    'mel_filterbank',
    'read_features',
    'write_features',
]

logger = logging.getLogger(__name__)

MEL_FLOOR = 1e-10
ENERGY_FLOOR = 1e-10
DELTA_WINDOW = 2


def frame_count(samples: int, window: int, hop: int) -> int:
    """Get the number of whole frames, floor((S - W) / H) + 1, or 0 if S < W."""

    if samples < window:
        return 0
    return (samples - window) // hop + 1


def hz_to_mel(hz: typing.Any) -> typing.Any:
    return 2595.0 * np.log10(1.0 + np.asarray(hz) / 700.0)


def mel_to_hz(mel: typing.Any) -> typing.Any:
    return 700.0 * (10.0 ** (np.asarray(mel) / 2595.0) - 1.0)


@functools.lru_cache(maxsize=8)
def mel_filterbank(n_filters: int, fft_size: int, sample_rate: int) -> np.ndarray:
    """
    Build triangular filters equally spaced on the mel scale, 0 Hz to Nyquist.

    :return: Read-only weights, shape (n_filters, fft_size // 2 + 1).
    """

    edges = mel_to_hz(np.linspace(0.0, hz_to_mel(sample_rate / 2), n_filters + 2))
    bins = np.arange(fft_size // 2 + 1) * sample_rate / fft_size
    lower, center, upper = edges[:-2, None], edges[1:-1, None], edges[2:, None]
    rising = (bins - lower) / (center - lower)
    falling = (upper - bins) / (upper - center)
    return util.freeze_array(np.maximum(0.0, np.minimum(rising, falling)))


def compute_deltas(frames: np.ndarray, window: int = DELTA_WINDOW) -> np.ndarray:
    """
    Compute regression deltas sum_k k (c[t+k] - c[t-k]) / (2 sum_k k^2).

    Edge frames are replicated, so a single frame has zero deltas.

    :param frames: Matrix of shape (T, d).
    :param window: Half-width W of the regression window.
    """

    frames = np.asarray(frames, dtype=np.float64)
    count = frames.shape[0]
    if count == 0:
        return np.zeros_like(frames)
    padded = np.pad(frames, ((window, window), (0, 0)), mode='edge')
    delta = np.zeros_like(frames)
    for k in range(1, window + 1):
        delta += k * (padded[window + k:window + k + count] - padded[window - k:window - k + count])
    return delta / (2 * sum(k * k for k in range(1, window + 1)))


def extract_features(
    buf: models.AudioBuffer,
    cfg: models.FeatureConfig,
    segment_id: int = 0,
) -> models.FeatureMatrix:
    """
    Convert a segment's audio to a matrix of MFCC frames.

    Buffers shorter than one window give an empty matrix and a warning.

    :param buf: Segment audio.
    :param cfg: Front-end configuration.
    :param segment_id: Identifier stored on the matrix.
    :raises EmptyAudioError: Buffer has no samples.
    """

    if len(buf) == 0:
        raise errors.EmptyAudioError(f'Segment {segment_id} has no samples.')
    buf = buf.downmix()
    rate = buf.sample_rate
    window = cfg.frame_length(rate)
    hop = cfg.frame_shift(rate)
    count = frame_count(len(buf), window, hop)
    if count == 0:
        logger.warning(
            'Segment %d has %d samples, shorter than one %d-sample frame',
            segment_id, len(buf), window,
        )
        return models.FeatureMatrix.empty(cfg.dimension, segment_id)

    signal = buf.samples.astype(np.float64)
    emphasized = np.concatenate([signal[:1], signal[1:] - cfg.preemphasis * signal[:-1]])
    frames = sliding_window_view(emphasized, window)[::hop][:count]

    nfft = cfg.fft_size(rate)
    spectrum = fft.rfft(frames * np.hamming(window), n=nfft, axis=1)
    power = np.abs(spectrum) ** 2 / nfft
    mel = power @ mel_filterbank(cfg.n_mel_filters, nfft, rate).T
    log_mel = np.log(np.maximum(mel, MEL_FLOOR))
    # Zero-padded so c1..c{n_mfcc} exist when n_mel_filters == n_mfcc.
    outputs = max(cfg.n_mel_filters, cfg.n_mfcc + 1)
    cepstra = fft.dct(log_mel, type=2, n=outputs, norm='ortho', axis=1)[:, 1:cfg.n_mfcc + 1]

    blocks = [cepstra]
    if cfg.include_energy:
        energy = np.log(np.maximum(np.sum(frames ** 2, axis=1), ENERGY_FLOOR))
        blocks.append(energy[:, None])
    static = np.hstack(blocks)

    blocks = [static]
    delta = compute_deltas(static)
    if cfg.include_delta:
        blocks.append(delta)
    if cfg.include_delta_delta:
        blocks.append(compute_deltas(delta))
    return models.FeatureMatrix(np.hstack(blocks), segment_id)


def extract_spans(
    buf: models.AudioBuffer,
    spans: typing.Sequence[models.SegmentSpan],
    cfg: models.FeatureConfig,
    threads: int = 1,
) -> typing.List[models.FeatureMatrix]:
    """Extract features for every span of a recording, in span order."""

    def extract(span: models.SegmentSpan) -> models.FeatureMatrix:
        piece = audio_io.slice_segment(buf, span)
        return extract_features(piece, cfg, span.segment_id)

    matrices = util.map_ordered(extract, spans, threads)
    logger.info('Extracted %d segments, d = %d', len(matrices), cfg.dimension)
    return matrices


def write_features(path: audio_io.PathType, matrix: models.FeatureMatrix) -> None:
    """Write a feature matrix in the "FEA1" format."""

    try:
        with open(path, 'wb') as f:
            f.write(matrix.to_binary())
    except OSError as error:
        raise errors.IoError(f'Cannot write features ({error.strerror})', os.fspath(path))


def read_features(path: audio_io.PathType, segment_id: int = 0) -> models.FeatureMatrix:
    """
    Read a feature matrix in the "FEA1" format.

    :raises BadMagicError: File does not start with "FEA1".
    :raises DimensionMismatchError: Payload size disagrees with the header.
    """

    try:
        with open(path, 'rb') as f:
            data = f.read()
    except OSError as error:
        raise errors.IoError(f'Cannot read features ({error.strerror})', os.fspath(path))
    return models.FeatureMatrix.create_from_binary(data, segment_id)
