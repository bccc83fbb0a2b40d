"""
    run_config
    ==========

    Complete configuration of a command-line run.

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

from .synth_spec import SynthSpec
from ..clustering.cluster_config import ClusterConfig
from ..features.feature_config import FeatureConfig
from ... import errors
from ... import util

__all__ = ['RunConfig']


@util.dataclass(frozen=True)
class RunConfig(util.Record):
    """
    Feature, clustering and synthesis settings read from one flat record.

    The `seed` key is shared by clustering and synthesis.

    :param features: MFCC front-end configuration.
    :param clustering: Clustering configuration.
    :param synth: Synthetic data configuration.
    """

    features: FeatureConfig
    clustering: ClusterConfig
    synth: SynthSpec

    def __init__(
        self,
        features: typing.Optional[FeatureConfig] = None,
        clustering: typing.Optional[ClusterConfig] = None,
        synth: typing.Optional[SynthSpec] = None,
    ) -> None:
        self._set('features', features or FeatureConfig())
        self._set('clustering', clustering or ClusterConfig())
        self._set('synth', synth or SynthSpec())

    @staticmethod
    def schema() -> typing.Dict[str, typing.FrozenSet[str]]:
        """Get the known keys of every section."""

        return {
            'features': frozenset(FeatureConfig().to_record()),
            'clustering': frozenset(ClusterConfig().to_record()),
            'synth': frozenset(SynthSpec().to_record()),
        }

    def to_record(self) -> util.RecordFormat:
        record = self.features.to_record()
        record.update(self.clustering.to_record())
        record.update(self.synth.to_record())
        return record

    @classmethod
    def create_from_record(cls, data: typing.Mapping[str, typing.Any]) -> RunConfig:
        schema = cls.schema()
        known = frozenset().union(*schema.values())
        unknown = sorted(set(data) - known)
        if unknown:
            raise errors.ConfigError(f'Unknown configuration keys: {", ".join(unknown)}.')

        def section(name: str) -> typing.Dict[str, typing.Any]:
            return {k: v for k, v in data.items() if k in schema[name]}

        return cls(
            FeatureConfig.create_from_record(section('features')),
            ClusterConfig.create_from_record(section('clustering')),
            SynthSpec.create_from_record(section('synth')),
        )

    def update(self, data: typing.Mapping[str, typing.Any]) -> RunConfig:
        """Get a copy with the record values in `data` overriding the current ones."""

        record = self.to_record()
        record.update(data)
        return type(self).create_from_record(record)
