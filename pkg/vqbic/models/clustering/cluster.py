"""
    cluster
    =======

    One cluster of the agglomerative clustering.

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

from ..codebook.histogram_vec import HistogramVec
from ..stats.segment_stats import SegmentStats
from ... import errors
from ... import util

__all__ = ['Cluster']

OptionalHistogramVec = typing.Optional[HistogramVec]


@util.dataclass(frozen=True)
class Cluster:
    """
    Cluster of segments with its pooled Gaussian model and histogram.

    :param cluster_id: Lowest member segment id.
    :param members: Member segment ids, sorted.
    :param stats: Pooled sufficient statistics of the members.
    :param histogram: (Optional) pooled codeword histogram, absent in baseline mode.
    """

    cluster_id: int
    members: typing.Tuple[int, ...]
    stats: SegmentStats
    histogram: OptionalHistogramVec

    def __init__(
        self,
        cluster_id: int,
        members: typing.Iterable[int],
        stats: SegmentStats,
        histogram: OptionalHistogramVec = None,
    ) -> None:
        members = tuple(sorted(members))
        if not members or members[0] != cluster_id:
            raise errors.ValidationError(f'Cluster {cluster_id} must be named after its lowest member.')
        self._set('cluster_id', cluster_id)
        self._set('members', members)
        self._set('stats', stats)
        self._set('histogram', histogram)

    def __len__(self) -> int:
        return len(self.members)
