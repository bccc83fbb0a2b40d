import fractions

import numpy as np

from vqbic import indexing
from vqbic import models
from tests import harness

SPEC = models.SynthSpec(n_speakers=3, segments_per_speaker=4, min_frames=50, max_frames=80, dimension=5)


class TestSynthesize(harness.TestCase):

    def test_shape(self):
        matrices, spans = indexing.synthesize(SPEC)
        self.assertEqual(len(matrices), 12)
        self.assertEqual([i.segment_id for i in matrices], list(range(12)))
        self.assertEqual([i.segment_id for i in spans], list(range(12)))
        for matrix, span in zip(matrices, spans):
            self.assertEqual(matrix.dimension, 5)
            self.assertGreaterEqual(len(matrix), 50)
            self.assertLessEqual(len(matrix), 80)
            self.assertEqual(span.end_time - span.start_time, fractions.Fraction(len(matrix), 100))

    def test_speakers(self):
        _, spans = indexing.synthesize(SPEC)
        labels = [i.ref_speaker for i in spans]
        self.assertEqual(sorted(set(labels)), ['spk000', 'spk001', 'spk002'])
        for label in set(labels):
            self.assertEqual(labels.count(label), 4)

    def test_contiguous(self):
        _, spans = indexing.synthesize(SPEC)
        self.assertEqual(spans[0].start_time, 0)
        for previous, current in zip(spans, spans[1:]):
            self.assertEqual(previous.end_time, current.start_time)

    def test_deterministic(self):
        first = indexing.synthesize(SPEC)
        second = indexing.synthesize(SPEC)
        self.assertEqual(first, second)
        third = indexing.synthesize(SPEC.replace(seed=1))
        self.assertNotEqual(first[0][0], third[0][0])

    def test_fixed_length(self):
        matrices, _ = indexing.synthesize(SPEC.replace(min_frames=60, max_frames=60))
        self.assertEqual({len(i) for i in matrices}, {60})

    def test_separated(self):
        spec = SPEC.replace(min_frames=400, max_frames=400, spread=10.0)
        matrices, spans = indexing.synthesize(spec)
        means = {}
        for matrix, span in zip(matrices, spans):
            means.setdefault(span.ref_speaker, []).append(matrix.frames.mean(axis=0))
        centers = {k: np.mean(v, axis=0) for k, v in means.items()}
        for label, values in means.items():
            for value in values:
                own = np.linalg.norm(value - centers[label])
                for other, center in centers.items():
                    if other != label:
                        self.assertLess(own, np.linalg.norm(value - center))

    def test_label(self):
        self.assertEqual(indexing.speaker_label(7), 'spk007')
        self.assertEqual(indexing.speaker_label(1234), 'spk1234')

    def test_covariance(self):
        rng = np.random.default_rng(0)
        cov = indexing.synth.random_covariance(rng, 6)
        self.assertAlmostEqual(float(np.trace(cov)), 6.0, places=12)
        self.assertAllClose(cov, cov.T)
        self.assertTrue(np.all(np.linalg.eigvalsh(cov) > 0))
