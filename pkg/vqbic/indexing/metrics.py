"""
    metrics
    =======

    Speaker purity (SP) and cluster purity (CP) of a clustering against
    reference speaker labels.

    With w(c, s) the mass of the segments of speaker s placed in cluster c:

        CP = Σ_c max_s w(c, s) / Σ w
        SP = Σ_s max_c w(c, s) / Σ w

    Segment-level scores weight every segment by 1, frame-level scores by
    its frame count.

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
import logging
import typing

import bidict
import numpy as np
from scipy import sparse

from .. import errors
from .. import models

__all__ = [
    'confusion_table',
    'evaluate',
    'purity',
    'purity_frame_level',
    'purity_segment_level',
]

logger = logging.getLogger(__name__)

FRAMES_PER_SECOND = 100
Assignment = typing.Mapping[int, int]
Reference = typing.Mapping[int, typing.Optional[str]]
Weights = typing.Mapping[int, float]
Table = typing.Tuple[np.ndarray, bidict.bidict, bidict.bidict]


def labeled(assignment: Assignment, reference: Reference, weights: Weights) -> typing.List[int]:
    """Check the key sets agree and get the ids of labeled segments."""

    keys = set(assignment)
    if keys != set(reference) or keys != set(weights):
        raise errors.KeyMismatchError('Assignment, reference and weights cover different segments.')
    unlabeled = sorted(k for k in keys if reference[k] is None)
    if unlabeled:
        logger.warning('Excluding %d unlabeled reference segments from scoring', len(unlabeled))
    ids = sorted(k for k in keys if reference[k] is not None)
    if not ids:
        raise errors.EmptyAssignmentError('No labeled segments to score.')
    for key in ids:
        if not weights[key] > 0:
            raise errors.ValidationError(f'Segment {key} has non-positive mass {weights[key]}.')
    return ids


def confusion_table(assignment: Assignment, reference: Reference, weights: Weights) -> Table:
    """
    Build the cluster x speaker mass table.

    :return: Table, cluster id to row map, speaker label to column map.
    """

    ids = labeled(assignment, reference, weights)
    cluster_index = bidict.bidict((c, i) for i, c in enumerate(sorted({assignment[k] for k in ids})))
    speaker_index = bidict.bidict((s, i) for i, s in enumerate(sorted({typing.cast(str, reference[k]) for k in ids})))
    rows = [cluster_index[assignment[k]] for k in ids]
    columns = [speaker_index[reference[k]] for k in ids]
    masses = [float(weights[k]) for k in ids]
    shape = (len(cluster_index), len(speaker_index))
    table = sparse.coo_matrix((masses, (rows, columns)), shape=shape).toarray()
    return table, cluster_index, speaker_index


def purities(table: np.ndarray) -> typing.Tuple[float, float]:
    total = table.sum()
    return float(table.max(axis=1).sum() / total), float(table.max(axis=0).sum() / total)


def purity(assignment: Assignment, reference: Reference, weights: Weights) -> typing.Tuple[float, float]:
    """
    Get (CP, SP) with the given per-segment masses.

    :raises KeyMismatchError: Key sets differ.
    :raises EmptyAssignmentError: Nothing to score.
    """

    table, _, _ = confusion_table(assignment, reference, weights)
    return purities(table)


def purity_segment_level(assignment: Assignment, reference: Reference) -> typing.Tuple[float, float]:
    """Get (CP, SP) with every segment weighted 1."""
    return purity(assignment, reference, {k: 1 for k in assignment})


def purity_frame_level(
    assignment: Assignment,
    reference: Reference,
    frame_counts: Weights,
) -> typing.Tuple[float, float]:
    """Get (CP, SP) with every segment weighted by its frame count."""
    return purity(assignment, reference, frame_counts)


def evaluate(
    assignment: Assignment,
    spans: typing.Sequence[models.SegmentSpan],
    frame_counts: typing.Optional[Weights] = None,
) -> models.PurityReport:
    """
    Score an assignment against reference spans at both granularities.

    :param assignment: Segment id to cluster id.
    :param spans: Reference spans carrying speaker labels.
    :param frame_counts: (Optional) exact frame counts, else 10 ms frames
        from the span durations.
    """

    reference = {i.segment_id: i.ref_speaker for i in spans}
    if frame_counts is None:
        frame_counts = {
            i.segment_id: max(1, round((i.end_time - i.start_time) * FRAMES_PER_SECOND))
            for i in spans
        }
    cp_segment, sp_segment = purity_segment_level(assignment, reference)
    table, cluster_index, speaker_index = confusion_table(assignment, reference, frame_counts)
    cp_frame, sp_frame = purities(table)
    return models.PurityReport(
        sp_segment, cp_segment, sp_frame, cp_frame, cluster_index, speaker_index, table,
    )
