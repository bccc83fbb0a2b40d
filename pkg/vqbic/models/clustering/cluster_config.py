"""
    cluster_config
    ==============

    Clustering run parameters.

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
import math
import typing

from .cluster_mode import ClusterMode
from ... import errors
from ... import util

__all__ = ['ClusterConfig']

OptionalFloat = typing.Optional[float]
OptionalInt = typing.Optional[int]


@util.dataclass(
    frozen=True,
    mode=ClusterMode.TWO_STAGE,
    n_best=200,
    lambda_=None,
    codebook_size=None,
    seed=0,
    alpha=2.0,
    beta=0.5,
    trim_outliers=False,
    audit_fast_match=False,
    threads=1,
)
class ClusterConfig(util.Record):
    """
    Parameters of one clustering run.

    :param mode: Pair-selection strategy.
    :param n_best: Pairs kept by the cosine fast-match (N).
    :param lambda_: ΔBIC tuning parameter, None to estimate it from the data.
    :param codebook_size: Codeword count K, None for the automatic size.
    :param seed: Codebook training seed.
    :param alpha: Weight of the mean bound in the λ estimate.
    :param beta: Weight of the bound spread in the λ estimate.
    :param trim_outliers: Drop the largest 5% of bounds before estimating λ.
    :param audit_fast_match: Count how often the all-pairs ΔBIC optimum survives the fast-match.
    :param threads: Worker cap for per-segment work, 0 for one per CPU.
    """

    mode: ClusterMode
    n_best: int
    lambda_: OptionalFloat
    codebook_size: OptionalInt
    seed: int
    alpha: float
    beta: float
    trim_outliers: bool
    audit_fast_match: bool
    threads: int

    def __post_init__(self) -> None:
        if self.n_best < 1:
            raise errors.ConfigError(f'n_best must be at least 1, got {self.n_best}.')
        if self.lambda_ is not None and not (math.isfinite(self.lambda_) and self.lambda_ > 0):
            raise errors.ConfigError(f'lambda must be positive, got {self.lambda_}.')
        if self.codebook_size is not None and self.codebook_size < 1:
            raise errors.ConfigError(f'codebook_size must be at least 1, got {self.codebook_size}.')
        if self.threads < 0:
            raise errors.ConfigError(f'threads must be non-negative, got {self.threads}.')

    @property
    def auto_lambda(self) -> bool:
        """Determine if λ is estimated from the data."""
        return self.lambda_ is None

    def to_record(self) -> util.RecordFormat:
        return {
            'mode': str(self.mode),
            'n_best': self.n_best,
            'lambda': util.AUTO if self.lambda_ is None else self.lambda_,
            'codebook_size': util.AUTO if self.codebook_size is None else self.codebook_size,
            'seed': self.seed,
            'alpha': self.alpha,
            'beta': self.beta,
            'trim_outliers': self.trim_outliers,
            'audit_fast_match': self.audit_fast_match,
            'threads': self.threads,
        }

    @classmethod
    def create_from_record(cls, data: typing.Mapping[str, typing.Any]) -> ClusterConfig:
        keys = set(cls().to_record())
        if not cls.validate_record_keys(data, set(), keys):
            raise errors.ConfigError(f'Unknown clustering keys: {sorted(set(data) - keys)}.')

        kwds: typing.Dict[str, typing.Any] = {}
        for key, value in data.items():
            if key == 'mode':
                kwds['mode'] = ClusterMode.create_from_name(str(value))
            elif key == 'lambda':
                kwds['lambda_'] = util.auto_or(value, float)
            elif key == 'codebook_size':
                kwds['codebook_size'] = util.auto_or(value, int)
            elif key in ('trim_outliers', 'audit_fast_match'):
                kwds[key] = util.as_bool(value)
            elif key in ('alpha', 'beta'):
                kwds[key] = util.coerce(value, float)
            else:
                kwds[key] = util.coerce(value, int)
        return cls(**kwds)
