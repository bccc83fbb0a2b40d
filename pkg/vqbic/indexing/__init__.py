"""
    indexing
    ========

    Speaker-indexing operations: audio and segment I/O, MFCC features,
    Gaussian statistics, ΔBIC, vector quantization, threshold estimation,
    agglomerative clustering, purity metrics and synthetic data.
"""

from .audio_io import *
from .features import *
from .gaussian_stats import *
from .bic import *
from .codebook import *
from .threshold import *
from .clustering import *
from .metrics import *
from .synth import *

__all__ = (
    audio_io.__all__
    + features.__all__
    + gaussian_stats.__all__
    + bic.__all__
    + codebook.__all__
    + threshold.__all__
    + clustering.__all__
    + metrics.__all__
    + synth.__all__
)
