import os
import tempfile

import numpy as np

from vqbic import cli
from vqbic import errors
from vqbic import indexing
from vqbic import models
from tests import fixtures
from tests import harness

SPEC = models.SynthSpec(n_speakers=3, segments_per_speaker=3, min_frames=150, max_frames=200, dimension=4)
CLUSTER = models.ClusterConfig(lambda_=1.0)


class CommandCase(harness.TestCase):

    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tempdir.cleanup)

    def path(self, *names):
        return os.path.join(self.tempdir.name, *names)

    def write_text(self, name, text):
        with open(self.path(name), 'w', encoding='utf-8') as f:
            f.write(text)
        return self.path(name)


class TestSynth(CommandCase):

    def test_files(self):
        out = self.path('synth')
        paths = cli.cmd_synth(SPEC, out)
        self.assertEqual(len(paths), 10)
        self.assertEqual(paths[0], self.path('synth', 'seg_000000.fea'))
        self.assertEqual(paths[-1], self.path('synth', cli.REFERENCE_FILE))
        for path in paths:
            self.assertTrue(os.path.isfile(path))

    def test_contents(self):
        out = self.path('synth')
        cli.cmd_synth(SPEC, out)
        matrices, spans = indexing.synthesize(SPEC)
        self.assertEqual(cli.read_feature_dir(out), matrices)
        self.assertEqual(indexing.load_segments(self.path('synth', cli.REFERENCE_FILE)), spans)


class TestFeatureDir(CommandCase):

    def test_feature_path(self):
        self.assertEqual(cli.feature_path('out', 42), os.path.join('out', 'seg_000042.fea'))

    def test_ids_from_names(self):
        rng = np.random.default_rng(0)
        for segment_id in (12, 3):
            indexing.write_features(cli.feature_path(self.tempdir.name, segment_id), fixtures.segment(rng, 0, 5, 2))
        self.write_text('notes.txt', 'ignored\n')
        self.write_text('seg_1.fea.bak', 'ignored\n')
        matrices = cli.read_feature_dir(self.tempdir.name)
        self.assertEqual([i.segment_id for i in matrices], [3, 12])

    def test_missing(self):
        with self.assertRaises(errors.IoError):
            cli.read_feature_dir(self.path('missing'))

    def test_empty(self):
        with self.assertRaises(errors.IoError):
            cli.read_feature_dir(self.tempdir.name)


class TestAssignment(CommandCase):

    def test_roundtrip(self):
        path = self.path('assignment.txt')
        cli.write_assignment(path, {4: 1, 1: 1, 0: 0})
        with open(path, encoding='utf-8') as f:
            self.assertEqual(f.read(), '0 0\n1 1\n4 1\n')
        self.assertEqual(cli.read_assignment(path), {0: 0, 1: 1, 4: 1})

    def test_comments(self):
        path = self.write_text('a.txt', '# segment cluster\n\n0 0\n  # note\n2 0\n')
        self.assertEqual(cli.read_assignment(path), {0: 0, 2: 0})

    def test_invalid(self):
        for text in ('0 0 0\n', '0 a\n', '-1 0\n', '0\n'):
            path = self.write_text('bad.txt', text)
            with self.assertRaises(errors.ParseError):
                cli.read_assignment(path)

    def test_duplicate(self):
        path = self.write_text('dup.txt', '0 0\n0 1\n')
        with self.assertRaises(errors.ParseError) as context:
            cli.read_assignment(path)
        self.assertEqual(context.exception.line, 2)

    def test_missing(self):
        with self.assertRaises(errors.IoError):
            cli.read_assignment(self.path('missing.txt'))


class TestExtract(CommandCase):

    def setUp(self):
        super().setUp()
        wav = self.path('input.wav')
        indexing.write_wav(wav, fixtures.tone(440, 2.0))
        self.wav = wav

    def test_extract(self):
        segments = self.write_text('input.seg', (
            '0 0.0 0.5 spkA\n'
            '1 0.5 0.51 spkA\n'
            '2 1.0 2.0 spkB\n'
        ))
        out = self.path('features')
        with self.assertLogs('vqbic.indexing.features', 'WARNING'):
            paths = cli.cmd_extract(self.wav, segments, models.FeatureConfig(), out, threads=2)
        self.assertEqual(paths, [
            cli.feature_path(out, 0),
            cli.feature_path(out, 2),
            os.path.join(out, cli.SEGMENTS_FILE),
        ])
        kept = indexing.load_segments(os.path.join(out, cli.SEGMENTS_FILE))
        self.assertEqual([i.segment_id for i in kept], [0, 2])
        matrices = cli.read_feature_dir(out)
        self.assertEqual([len(i) for i in matrices], [48, 98])
        self.assertEqual(matrices[0].dimension, 26)

    def test_out_of_range(self):
        segments = self.write_text('input.seg', '0 1.5 2.5\n')
        with self.assertRaises(errors.OutOfRangeError):
            cli.cmd_extract(self.wav, segments, models.FeatureConfig(), self.path('features'))


class TestCluster(CommandCase):

    def setUp(self):
        super().setUp()
        self.features = self.path('synth')
        cli.cmd_synth(SPEC, self.features)

    def test_cluster(self):
        report = cli.cmd_cluster(self.features, CLUSTER)
        assignment = cli.read_assignment(self.path('synth', cli.ASSIGNMENT_FILE))
        self.assertEqual(assignment, report.state.assignment())
        self.assertEqual(sorted(assignment), list(range(9)))
        with open(self.path('synth', cli.REPORT_FILE), encoding='utf-8') as f:
            text = f.read()
        self.assertEqual(text, report.to_text())
        self.assertIn('[summary]', text)
        self.assertIsNone(report.audio_duration)

    def test_output_dir(self):
        out = self.path('run', 'baseline')
        report = cli.cmd_cluster(self.features, CLUSTER.replace(mode=models.ClusterMode.BASELINE), out)
        self.assertEqual(report.state.mode, models.ClusterMode.BASELINE)
        self.assertTrue(os.path.isfile(os.path.join(out, cli.ASSIGNMENT_FILE)))
        self.assertFalse(os.path.exists(self.path('synth', cli.ASSIGNMENT_FILE)))

    def test_duration(self):
        spans = indexing.load_segments(self.path('synth', cli.REFERENCE_FILE))
        indexing.save_segments(self.path('synth', cli.SEGMENTS_FILE), spans)
        report = cli.cmd_cluster(self.features, CLUSTER)
        self.assertEqual(report.audio_duration, indexing.total_duration(spans))
        self.assertIn('xrt', report.to_record())

    def test_eval(self):
        cli.cmd_cluster(self.features, CLUSTER)
        assignment = self.path('synth', cli.ASSIGNMENT_FILE)
        reference = self.path('synth', cli.REFERENCE_FILE)
        report = cli.cmd_eval(assignment, reference)
        exact = cli.cmd_eval(assignment, reference, self.features)
        self.assertEqual(report.n_speakers, 3)
        # Synthetic spans are 10 ms per frame, so both frame counts agree.
        self.assertEqual(report.cp_frame, exact.cp_frame)
        self.assertEqual(report.sp_frame, exact.sp_frame)
        self.assertArrayEqual(report.confusion, exact.confusion)

    def test_eval_mismatch(self):
        assignment = self.write_text('partial.txt', '0 0\n1 0\n')
        with self.assertRaises(errors.KeyMismatchError):
            cli.cmd_eval(assignment, self.path('synth', cli.REFERENCE_FILE))
