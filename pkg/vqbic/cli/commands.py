"""
    commands
    ========

    Sequential pipeline steps behind the `vqbic` subcommands.

    File layout of a feature directory:

        seg_<id:06d>.fea    one "FEA1" feature matrix per segment
        reference.seg       ground-truth spans (written by `synth`)
        segments.seg        extracted spans (written by `extract`)

    `cluster` adds `assignment.txt` (`<segment_id> <cluster_id>` lines,
    sorted by segment id) and `report.txt`.

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
import os
import re
import typing

from .. import errors
from .. import indexing
from .. import models

__all__ = [
    'ASSIGNMENT_FILE',
    'REFERENCE_FILE',
    'REPORT_FILE',
    'SEGMENTS_FILE',
    'cmd_cluster',
    'cmd_eval',
    'cmd_extract',
    'cmd_synth',
    'feature_path',
    'read_assignment',
    'read_feature_dir',
    'write_assignment',
]

logger = logging.getLogger(__name__)

PathType = indexing.audio_io.PathType
Assignment = typing.Dict[int, int]
FEATURE_NAME = 'seg_{:06d}.fea'
FEATURE_PATTERN = re.compile(r'^seg_(\d+)\.fea$')
REFERENCE_FILE = 'reference.seg'
SEGMENTS_FILE = 'segments.seg'
ASSIGNMENT_FILE = 'assignment.txt'
REPORT_FILE = 'report.txt'

# HELPERS


def feature_path(directory: PathType, segment_id: int) -> str:
    return os.path.join(directory, FEATURE_NAME.format(segment_id))


def make_dir(directory: PathType) -> None:
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as error:
        raise errors.IoError(f'Cannot create directory ({error.strerror})', os.fspath(directory))


def write_text(path: PathType, text: str) -> None:
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    except OSError as error:
        raise errors.IoError(f'Cannot write file ({error.strerror})', os.fspath(path))


def feature_files(directory: PathType) -> typing.List[typing.Tuple[int, str]]:
    """List (segment id, path) of the feature files in a directory, by id."""

    if not os.path.isdir(directory):
        raise errors.IoError('Feature directory does not exist', os.fspath(directory))
    found = []
    for name in os.listdir(directory):
        match = FEATURE_PATTERN.match(name)
        if match is not None:
            found.append((int(match.group(1)), os.path.join(directory, name)))
    if not found:
        raise errors.IoError('No seg_<id>.fea files found', os.fspath(directory))
    return sorted(found)


def read_feature_dir(directory: PathType) -> typing.List[models.FeatureMatrix]:
    """Read every feature file of a directory, ids taken from the file names."""

    return [indexing.read_features(path, segment_id) for segment_id, path in feature_files(directory)]


def known_duration(directory: PathType) -> typing.Optional[float]:
    """Get the audio seconds behind a feature directory, if it was extracted from audio."""

    path = os.path.join(directory, SEGMENTS_FILE)
    if not os.path.isfile(path):
        return None
    return indexing.total_duration(indexing.load_segments(path))


def write_assignment(path: PathType, assignment: typing.Mapping[int, int]) -> None:
    lines = [f'{segment_id} {cluster_id}\n' for segment_id, cluster_id in sorted(assignment.items())]
    write_text(path, ''.join(lines))


def read_assignment(path: PathType) -> Assignment:
    """
    Read an assignment file.

    :raises ParseError: A line is not two integers, or a segment repeats.
    """

    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as error:
        raise errors.IoError(f'Cannot read assignment ({error.strerror})', os.fspath(path))

    assignment: Assignment = {}
    for line, raw in enumerate(text.splitlines(), 1):
        fields = raw.split()
        if not fields or fields[0].startswith('#'):
            continue
        if len(fields) != 2 or not all(i.isdigit() for i in fields):
            raise errors.ParseError(f'Expected "<segment_id> <cluster_id>", got {raw!r}.', line)
        segment_id, cluster_id = (int(i) for i in fields)
        if segment_id in assignment:
            raise errors.ParseError(f'Segment {segment_id} is assigned twice.', line)
        assignment[segment_id] = cluster_id
    return assignment


# COMMANDS


def cmd_synth(spec: models.SynthSpec, out_dir: PathType) -> typing.List[str]:
    """
    Write a synthetic feature set and its ground-truth segment list.

    :return: Paths written.
    """

    matrices, spans = indexing.synthesize(spec)
    make_dir(out_dir)
    paths = []
    for matrix in matrices:
        path = feature_path(out_dir, matrix.segment_id)
        indexing.write_features(path, matrix)
        paths.append(path)
    reference = os.path.join(out_dir, REFERENCE_FILE)
    indexing.save_segments(reference, spans)
    paths.append(reference)
    return paths


def cmd_extract(
    wav: PathType,
    segments: PathType,
    cfg: models.FeatureConfig,
    out_dir: PathType,
    threads: int = 1,
) -> typing.List[str]:
    """
    Extract one feature file per segment of a recording.

    Segments too short for a single frame get no feature file and are
    left out of `segments.seg`.

    :return: Paths written.
    """

    buf = indexing.read_wav(wav)
    spans = indexing.load_segments(segments)
    matrices = indexing.extract_spans(buf, spans, cfg, threads)
    make_dir(out_dir)

    paths = []
    kept = []
    for span, matrix in zip(spans, matrices):
        if len(matrix) == 0:
            continue
        path = feature_path(out_dir, matrix.segment_id)
        indexing.write_features(path, matrix)
        paths.append(path)
        kept.append(span)
    listing = os.path.join(out_dir, SEGMENTS_FILE)
    indexing.save_segments(listing, kept)
    paths.append(listing)
    return paths


def cmd_cluster(
    features_dir: PathType,
    cfg: models.ClusterConfig,
    out_dir: typing.Optional[PathType] = None,
) -> models.RunReport:
    """
    Cluster a feature directory, writing the assignment file and report.

    :param features_dir: Directory of `seg_<id>.fea` files.
    :param cfg: Clustering configuration.
    :param out_dir: (Optional) output directory, defaults to `features_dir`.
    """

    segments = read_feature_dir(features_dir)
    report = indexing.cluster(segments, cfg)
    duration = known_duration(features_dir)
    if duration is not None:
        report = report.replace(audio_duration=duration)

    out_dir = features_dir if out_dir is None else out_dir
    make_dir(out_dir)
    write_assignment(os.path.join(out_dir, ASSIGNMENT_FILE), report.state.assignment())
    write_text(os.path.join(out_dir, REPORT_FILE), report.to_text())
    logger.info(
        'Clustered %d segments into %d clusters in %.3f s',
        len(segments), report.state.n_clusters, report.wall_time,
    )
    return report


def cmd_eval(
    assignment: PathType,
    reference: PathType,
    features_dir: typing.Optional[PathType] = None,
) -> models.PurityReport:
    """
    Score an assignment file against a reference segment list.

    :param features_dir: (Optional) feature directory giving exact frame
        counts, else frames are counted at 10 ms from span durations.
    """

    clusters = read_assignment(assignment)
    spans = indexing.load_segments(reference)
    frame_counts = None
    if features_dir is not None:
        frame_counts = {i.segment_id: len(i) for i in read_feature_dir(features_dir)}
    return indexing.evaluate(clusters, spans, frame_counts)
