"""
    bic_params
    ==========

    Parameters of the ΔBIC merge criterion.
"""

from __future__ import annotations
import math

from ... import errors
from ... import util

__all__ = ['BicParams']


@util.dataclass(frozen=True)
class BicParams:
    """
    ΔBIC tuning parameter and feature dimension.

    :param lambda_: Penalty weight λ, strictly positive.
    :param dimension: Feature dimension d.
    """

    lambda_: float
    dimension: int

    def __init__(self, lambda_: float, dimension: int) -> None:
        if not (math.isfinite(lambda_) and lambda_ > 0):
            raise errors.ValidationError(f'lambda must be positive, got {lambda_}.')
        if dimension < 1:
            raise errors.ValidationError(f'Dimension must be at least 1, got {dimension}.')
        self._set('lambda_', float(lambda_))
        self._set('dimension', int(dimension))
