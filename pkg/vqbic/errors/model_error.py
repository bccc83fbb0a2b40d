"""
    model_error
    ===========

    Errors raised by the statistical models: Gaussian statistics, the
    BIC, and the codebook.
"""

from __future__ import annotations

from .base import ValidationError

__all__ = [
    'DegenerateCovarianceError',
    'EmptySegmentError',
    'NotPosDefError',
    'PenaltyDomainError',
    'TooFewFramesError',
    'ZeroVectorError',
]


class EmptySegmentError(ValidationError):
    """Segment holds no frames."""


class DegenerateCovarianceError(ValidationError):
    """Covariance matrix cannot be used for a log-determinant."""


class NotPosDefError(DegenerateCovarianceError):
    """Regularised covariance matrix is not positive definite."""


class PenaltyDomainError(ValidationError):
    """BIC penalty requested outside d >= 1, n >= 2."""


class TooFewFramesError(ValidationError):
    """Fewer pooled frames than requested codewords."""


class ZeroVectorError(ValidationError):
    """Cosine distance requested for an all-zero histogram."""
