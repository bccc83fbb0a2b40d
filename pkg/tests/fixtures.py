"""
    fixtures
    ========

    Shared synthetic inputs for the test suites.
"""

import numpy as np

from vqbic import models


def gaussian_frames(rng, count, dimension, mean=0.0, scale=1.0):
    """Draw `count` frames of isotropic Gaussian features as float32."""
    return (mean + scale * rng.standard_normal((count, dimension))).astype(np.float32)


def segment(rng, segment_id, count, dimension, mean=0.0, scale=1.0):
    """Draw one isotropic Gaussian feature segment."""

    frames = gaussian_frames(rng, count, dimension, mean, scale)
    return models.FeatureMatrix(frames, segment_id)


def speaker_segments(seed, n_speakers, per_speaker, count, dimension, spread=10.0):
    """
    Draw segments of well-separated speakers, interleaved by speaker.

    :return: Segments with ids 0..n-1 and the speaker index of each.
    """

    rng = np.random.default_rng(seed)
    means = spread * rng.standard_normal((n_speakers, dimension))
    speakers = [i % n_speakers for i in range(n_speakers * per_speaker)]
    segments = [
        segment(rng, index, count, dimension, means[speaker])
        for index, speaker in enumerate(speakers)
    ]
    return segments, speakers


def tone(frequency, seconds, amplitude=8000, sample_rate=models.SAMPLE_RATE):
    """Generate a mono sine tone as an AudioBuffer."""

    t = np.arange(int(seconds * sample_rate)) / sample_rate
    samples = np.rint(amplitude * np.sin(2 * np.pi * frequency * t))
    return models.AudioBuffer(samples.astype(np.int16), sample_rate)
