"""
    run_report
    ==========

    Human and machine-readable summary of a clustering run.

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

from ..clustering.cluster_config import ClusterConfig
from ..clustering.cluster_state import ClusterState
from ..threshold.threshold_estimate import ThresholdEstimate
from ... import util

__all__ = ['RunReport']

OptionalFloat = typing.Optional[float]
OptionalInt = typing.Optional[int]
OptionalThresholdEstimate = typing.Optional[ThresholdEstimate]
TIMING_KEYS = frozenset({'wall_time', 'xrt'})


@util.dataclass(frozen=True)
class RunReport(util.Object):
    """
    Outcome of `cluster`, rendered to `report.txt`.

    :param state: Final clustering state.
    :param config: Clustering configuration used.
    :param codebook_size: (Optional) codeword count, absent in baseline mode.
    :param threshold: (Optional) λ estimate, present when λ was automatic.
    :param wall_time: Clustering wall-clock time in seconds.
    :param audio_duration: (Optional) seconds of audio clustered.
    """

    state: ClusterState
    config: ClusterConfig
    codebook_size: OptionalInt
    threshold: OptionalThresholdEstimate
    wall_time: float
    audio_duration: OptionalFloat

    def __init__(
        self,
        state: ClusterState,
        config: ClusterConfig,
        codebook_size: OptionalInt = None,
        threshold: OptionalThresholdEstimate = None,
        wall_time: float = 0.0,
        audio_duration: OptionalFloat = None,
    ) -> None:
        self._set('state', state)
        self._set('config', config)
        self._set('codebook_size', codebook_size)
        self._set('threshold', threshold)
        self._set('wall_time', wall_time)
        self._set('audio_duration', audio_duration)

    @property
    def xrt(self) -> OptionalFloat:
        """Get the real-time factor, if the audio duration is known."""

        if not self.audio_duration:
            return None
        return self.wall_time / self.audio_duration

    def to_record(self) -> util.RecordFormat:
        state = self.state
        record: util.RecordFormat = {
            'mode': str(state.mode),
            'n_segments': len(state.segment_ids),
            'n_clusters': state.n_clusters,
            'n_merges': len(state.merge_log),
            'lambda': state.lambda_,
            'lambda_source': 'auto' if self.threshold is not None else 'fixed',
            'n_best': self.config.n_best,
            'codebook_size': self.codebook_size,
            'seed': self.config.seed,
            'cosine_evals': state.cosine_evals,
            'bic_evals': state.bic_evals,
            'fast_match_stopped': state.fast_match_stopped,
        }
        if state.audit_checks is not None:
            record['audit_checks'] = state.audit_checks
            record['audit_hits'] = state.audit_hits
        if self.threshold is not None:
            record.update(self.threshold.to_record())
        record['wall_time'] = self.wall_time
        if self.xrt is not None:
            record['audio_duration'] = self.audio_duration
            record['xrt'] = self.xrt
        return record

    def to_text(self) -> str:
        """Render the run report, with the `[summary]` key-value block last."""

        state = self.state
        lines = [
            'clustering report',
            '=================',
            f'mode: {state.mode} ({state.mode.description()})',
            f'segments: {len(state.segment_ids)}  clusters: {state.n_clusters}',
            f'lambda: {state.lambda_!r}',
            f'evaluations: cosine {state.cosine_evals}  bic {state.bic_evals}',
        ]
        if state.fast_match_stopped:
            lines.append('note: stopped on the fast-match shortlist, remaining pairs were not rescanned')
        lines += ['', 'merge log (iteration id_a id_b cosine_rank delta_bic)']
        lines += [i.to_line() for i in state.merge_log]
        lines += ['', '[summary]']
        for key, value in self.to_record().items():
            lines.append(f'{key} = {"none" if value is None else value}')
        return '\n'.join(lines) + '\n'
