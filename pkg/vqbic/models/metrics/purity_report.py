"""
    purity_report
    =============

    Speaker and cluster purity scores of a clustering.

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

import bidict
import numpy as np

from ... import errors
from ... import util

__all__ = ['PurityReport']

PURITY_FIELDS = ('sp_segment', 'cp_segment', 'sp_frame', 'cp_frame')


@util.dataclass(frozen=True)
class PurityReport(util.Object):
    """
    Purity at segment and frame granularity, with the frame-mass confusion table.

    Cluster purity is the share of mass held by the dominant speaker of
    each cluster; speaker purity is the share held by the dominant
    cluster of each speaker.

    :param sp_segment: Speaker purity, every segment weighted 1.
    :param cp_segment: Cluster purity, every segment weighted 1.
    :param sp_frame: Speaker purity, segments weighted by frame count.
    :param cp_frame: Cluster purity, segments weighted by frame count.
    :param cluster_index: Cluster id to confusion row.
    :param speaker_index: Speaker label to confusion column.
    :param confusion: Frame mass per (cluster, speaker).
    """

    sp_segment: float
    cp_segment: float
    sp_frame: float
    cp_frame: float
    cluster_index: bidict.frozenbidict
    speaker_index: bidict.frozenbidict
    confusion: np.ndarray

    def __init__(
        self,
        sp_segment: float,
        cp_segment: float,
        sp_frame: float,
        cp_frame: float,
        cluster_index: typing.Mapping[int, int],
        speaker_index: typing.Mapping[str, int],
        confusion: typing.Any,
    ) -> None:
        table = util.freeze_array(confusion, dtype=np.float64)
        if table.shape != (len(cluster_index), len(speaker_index)):
            raise errors.DimensionMismatchError(
                f'Confusion shape {table.shape} does not match the label counts.'
            )
        for name, value in zip(PURITY_FIELDS, (sp_segment, cp_segment, sp_frame, cp_frame)):
            if not 0.0 <= value <= 1.0:
                raise errors.ValidationError(f'{name} = {value} is outside [0, 1].')
        self._set('sp_segment', sp_segment)
        self._set('cp_segment', cp_segment)
        self._set('sp_frame', sp_frame)
        self._set('cp_frame', cp_frame)
        self._set('cluster_index', bidict.frozenbidict(cluster_index))
        self._set('speaker_index', bidict.frozenbidict(speaker_index))
        self._set('confusion', table)

    @property
    def n_clusters(self) -> int:
        return len(self.cluster_index)

    @property
    def n_speakers(self) -> int:
        return len(self.speaker_index)

    def mass(self, cluster_id: int, speaker: str) -> float:
        """Get the frame mass of `speaker` inside `cluster_id`."""
        return float(self.confusion[self.cluster_index[cluster_id], self.speaker_index[speaker]])

    def dominant_speaker(self, cluster_id: int) -> str:
        """Get the speaker holding most of a cluster's frames, lowest column on ties."""

        column = int(np.argmax(self.confusion[self.cluster_index[cluster_id]]))
        return typing.cast(str, self.speaker_index.inverse[column])

    def to_record(self) -> util.RecordFormat:
        return {
            'sp_segment': self.sp_segment,
            'cp_segment': self.cp_segment,
            'sp_frame': self.sp_frame,
            'cp_frame': self.cp_frame,
            'n_clusters': self.n_clusters,
            'n_speakers': self.n_speakers,
        }

    def to_text(self) -> str:
        """Render the scores and the confusion table as UTF-8 text."""

        speakers = [self.speaker_index.inverse[i] for i in range(self.n_speakers)]
        width = max([len(str(i)) for i in speakers] + [8])
        lines = [
            'purity report',
            '=============',
            f'clusters: {self.n_clusters}  speakers: {self.n_speakers}',
            f'segment level  SP {self.sp_segment:.4f}  CP {self.cp_segment:.4f}',
            f'frame level    SP {self.sp_frame:.4f}  CP {self.cp_frame:.4f}',
            '',
            'frame mass (cluster x speaker)',
            'cluster'.rjust(width) + ''.join(str(i).rjust(width + 1) for i in speakers),
        ]
        for row in range(self.n_clusters):
            label = str(self.cluster_index.inverse[row]).rjust(width)
            cells = ''.join(f'{int(i):d}'.rjust(width + 1) for i in self.confusion[row])
            lines.append(label + cells)
        lines += ['', '[summary]']
        lines += [f'{k} = {v}' for k, v in self.to_record().items()]
        return '\n'.join(lines) + '\n'
