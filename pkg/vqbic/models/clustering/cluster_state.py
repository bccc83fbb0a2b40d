"""
    cluster_state
    =============

    Result of an agglomerative clustering run.

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

from .cluster import Cluster
from .cluster_mode import ClusterMode
from .merge_record import MergeRecord
from ... import errors
from ... import util

__all__ = ['ClusterState']

OptionalInt = typing.Optional[int]


@util.dataclass(frozen=True)
class ClusterState:
    """
    Final clusters, merge log and evaluation counters.

    :param clusters: Surviving clusters, sorted by id.
    :param merge_log: Merges in the order they were made.
    :param cosine_evals: Cosine distances computed.
    :param bic_evals: ΔBIC values computed.
    :param mode: Strategy that produced the state.
    :param lambda_: Tuning parameter used.
    :param fast_match_stopped: Stopped with pairs left unscored by the fast-match.
    :param audit_checks: (Optional) iterations audited against the all-pairs optimum.
    :param audit_hits: (Optional) audited iterations where the optimum survived.
    """

    clusters: typing.Tuple[Cluster, ...]
    merge_log: typing.Tuple[MergeRecord, ...]
    cosine_evals: int
    bic_evals: int
    mode: ClusterMode
    lambda_: float
    fast_match_stopped: bool
    audit_checks: OptionalInt
    audit_hits: OptionalInt

    def __init__(
        self,
        clusters: typing.Iterable[Cluster],
        merge_log: typing.Iterable[MergeRecord],
        cosine_evals: int,
        bic_evals: int,
        mode: ClusterMode,
        lambda_: float,
        fast_match_stopped: bool = False,
        audit_checks: OptionalInt = None,
        audit_hits: OptionalInt = None,
    ) -> None:
        clusters = tuple(sorted(clusters, key=lambda i: i.cluster_id))
        members = [j for i in clusters for j in i.members]
        if len(members) != len(set(members)):
            raise errors.ValidationError('Cluster member sets overlap.')
        self._set('clusters', clusters)
        self._set('merge_log', tuple(merge_log))
        self._set('cosine_evals', cosine_evals)
        self._set('bic_evals', bic_evals)
        self._set('mode', mode)
        self._set('lambda_', lambda_)
        self._set('fast_match_stopped', fast_match_stopped)
        self._set('audit_checks', audit_checks)
        self._set('audit_hits', audit_hits)

    @property
    def n_clusters(self) -> int:
        """Get the number of surviving clusters."""
        return len(self.clusters)

    @property
    def segment_ids(self) -> typing.List[int]:
        """Get every clustered segment id, sorted."""
        return sorted(j for i in self.clusters for j in i.members)

    @property
    def counters(self) -> typing.Dict[str, int]:
        """Get the evaluation counters."""
        return {'cosine_evals': self.cosine_evals, 'bic_evals': self.bic_evals}

    def assignment(self) -> typing.Dict[int, int]:
        """Map every segment id to its cluster id, in segment order."""

        pairs = ((j, i.cluster_id) for i in self.clusters for j in i.members)
        return dict(sorted(pairs))

    def merge_keys(self) -> typing.List[typing.Tuple[int, int, int, float]]:
        """Get the merge log without fast-match ranks."""
        return [i.key() for i in self.merge_log]
