"""
    threshold_estimate
    ==================

    Online estimate of the ΔBIC tuning parameter.

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

from ... import errors
from ... import util

__all__ = ['ThresholdEstimate']

DEFAULT_ALPHA = 2.0
DEFAULT_BETA = 0.5


@util.dataclass(frozen=True)
class ThresholdEstimate(util.Object):
    """
    Tuning parameter λ_act = α·λ̄ + β·σ from per-segment split bounds.

    :param per_segment_lambda: Bound of every usable segment, in segment order.
    :param lambda_bar: Mean of the bounds.
    :param sigma: Population standard deviation of the bounds.
    :param lambda_act: Final tuning parameter.
    :param alpha: Weight of the mean.
    :param beta: Weight of the spread.
    :param skipped_ids: Segments too short to split.
    :param trimmed: Whether the largest 5% of bounds were dropped.
    """

    per_segment_lambda: np.ndarray
    lambda_bar: float
    sigma: float
    lambda_act: float
    alpha: float
    beta: float
    skipped_ids: typing.Tuple[int, ...]
    trimmed: bool

    def __init__(
        self,
        per_segment_lambda: typing.Any,
        lambda_bar: float,
        sigma: float,
        lambda_act: float,
        alpha: float = DEFAULT_ALPHA,
        beta: float = DEFAULT_BETA,
        skipped_ids: typing.Sequence[int] = (),
        trimmed: bool = False,
    ) -> None:
        if lambda_act != alpha * lambda_bar + beta * sigma:
            raise errors.ThresholdError('lambda_act must equal alpha * lambda_bar + beta * sigma.')
        if not lambda_act > 0:
            raise errors.ThresholdError(f'Estimated lambda {lambda_act} is not positive.')
        self._set('per_segment_lambda', util.freeze_array(per_segment_lambda, dtype=np.float64))
        self._set('lambda_bar', lambda_bar)
        self._set('sigma', sigma)
        self._set('lambda_act', lambda_act)
        self._set('alpha', alpha)
        self._set('beta', beta)
        self._set('skipped_ids', tuple(skipped_ids))
        self._set('trimmed', trimmed)

    @property
    def n_used(self) -> int:
        """Get the number of segments contributing a bound."""
        return int(self.per_segment_lambda.size)

    def summary(self) -> typing.Dict[str, float]:
        """Get the min, quartiles and max of the per-segment bounds."""

        q = np.quantile(self.per_segment_lambda, [0.0, 0.25, 0.5, 0.75, 1.0])
        keys = ('min', 'q1', 'median', 'q3', 'max')
        return {f'lambda_{k}': float(v) for k, v in zip(keys, q)}

    def to_record(self) -> util.RecordFormat:
        record: util.RecordFormat = {
            'lambda_act': self.lambda_act,
            'lambda_bar': self.lambda_bar,
            'lambda_sigma': self.sigma,
            'alpha': self.alpha,
            'beta': self.beta,
            'lambda_segments': self.n_used,
            'lambda_skipped': len(self.skipped_ids),
            'trim_outliers': self.trimmed,
        }
        record.update(self.summary())
        return record
