import math
import random

import numpy as np

from vqbic import errors
from vqbic import indexing
from vqbic import models
from tests import fixtures
from tests import harness

TWO_STAGE = models.ClusterConfig(lambda_=1.0)
BASELINE = TWO_STAGE.replace(mode=models.ClusterMode.BASELINE)


def pair_count(count):
    return count * (count - 1) // 2


def speaker_assignment(speakers):
    """Get the assignment a perfect clustering of interleaved speakers gives."""
    return {i: speaker for i, speaker in enumerate(speakers)}


class TestCosineDistance(harness.TestCase):

    def histogram(self, weights):
        return models.HistogramVec(np.array(weights, dtype=np.float64))

    def test_values(self):
        a = self.histogram([1.0, 0.0])
        b = self.histogram([0.0, 1.0])
        c = self.histogram([0.5, 0.5])
        self.assertEqual(indexing.cosine_distance(a, a), 0.0)
        self.assertEqual(indexing.cosine_distance(a, b), 1.0)
        self.assertAlmostEqual(indexing.cosine_distance(a, c), 1 - 1 / math.sqrt(2), places=12)

    def test_symmetric(self):
        a = self.histogram([0.2, 0.3, 0.5])
        b = self.histogram([0.6, 0.4, 0.0])
        self.assertEqual(indexing.cosine_distance(a, b), indexing.cosine_distance(b, a))

    def test_clipped(self):
        a = self.histogram([0.1] * 10)
        self.assertGreaterEqual(indexing.cosine_distance(a, a), 0.0)

    def test_invalid(self):
        a = self.histogram([1.0, 0.0])
        with self.assertRaises(errors.ZeroVectorError):
            indexing.cosine_distance(a, self.histogram([0.0, 0.0]))
        with self.assertRaises(errors.DimensionMismatchError):
            indexing.cosine_distance(a, self.histogram([1.0, 0.0, 0.0]))

    def test_cosine_matrix(self):
        weights = np.array([[1.0, 0.0], [0.0, 1.0], [0.5, 0.5]])
        norms = np.linalg.norm(weights, axis=1)
        matrix = indexing.clustering.cosine_matrix(weights, norms)
        self.assertArrayEqual(matrix, matrix.T)
        self.assertArrayEqual(np.diag(matrix), np.zeros(3))
        histograms = [models.HistogramVec(i) for i in weights]
        for i in range(3):
            for j in range(i + 1, 3):
                self.assertAlmostEqual(matrix[i, j], indexing.cosine_distance(histograms[i], histograms[j]), places=12)


class TestPrepare(harness.TestCase):

    def test_sorted(self):
        segments, _ = fixtures.speaker_segments(0, 2, 2, 20, 2)
        ordered = indexing.clustering.prepare(segments[::-1])
        self.assertEqual([i.segment_id for i in ordered], [0, 1, 2, 3])

    def test_invalid(self):
        rng = np.random.default_rng(1)
        prepare = indexing.clustering.prepare
        with self.assertRaises(errors.ValidationError):
            prepare([])
        with self.assertRaises(errors.ValidationError):
            prepare([fixtures.segment(rng, 1, 10, 2), fixtures.segment(rng, 1, 10, 2)])
        with self.assertRaises(errors.DimensionMismatchError):
            prepare([fixtures.segment(rng, 0, 10, 2), fixtures.segment(rng, 1, 10, 3)])
        with self.assertRaises(errors.EmptySegmentError):
            prepare([fixtures.segment(rng, 0, 10, 2), models.FeatureMatrix.empty(2, 1)])


class TestClusterBaseline(harness.TestCase):

    def setUp(self):
        self.segments, self.speakers = fixtures.speaker_segments(2, 3, 3, 200, 4)

    def test_speakers(self):
        state = indexing.cluster_baseline(self.segments, 1.0)
        self.assertEqual(state.mode, models.ClusterMode.BASELINE)
        self.assertEqual(state.assignment(), speaker_assignment(self.speakers))
        self.assertEqual(state.n_clusters, 3)
        self.assertEqual(len(state.merge_log), 6)
        self.assertEqual(state.cosine_evals, 0)
        # Every iteration scores all pairs, including the final check.
        self.assertEqual(state.bic_evals, sum(pair_count(i) for i in range(3, 10)))
        self.assertIsNone(state.audit_checks)

    def test_merge_log(self):
        state = indexing.cluster_baseline(self.segments, 1.0)
        for iteration, record in enumerate(state.merge_log):
            self.assertEqual(record.iteration, iteration)
            self.assertLess(record.id_a, record.id_b)
            self.assertGreater(record.delta_bic, 0.0)
            self.assertIsNone(record.cosine_rank)

    def test_statistics(self):
        state = indexing.cluster_baseline(self.segments, 1.0)
        for cluster in state.clusters:
            frames = np.vstack([self.segments[i].frames for i in cluster.members])
            pooled = indexing.accumulate(frames)
            self.assertEqual(cluster.stats.n, pooled.n)
            self.assertAllClose(cluster.stats.sum, pooled.sum, rtol=1e-10)
            self.assertAllClose(cluster.stats.scatter, pooled.scatter, rtol=1e-10)
            self.assertIsNone(cluster.histogram)

    def test_merge_all(self):
        state = indexing.cluster_baseline(self.segments, 1e6)
        self.assertEqual(state.n_clusters, 1)
        self.assertEqual(state.clusters[0].members, tuple(range(9)))
        # No final check once a single cluster is left.
        self.assertEqual(state.bic_evals, sum(pair_count(i) for i in range(2, 10)))

    def test_merge_none(self):
        segments, _ = fixtures.speaker_segments(3, 4, 1, 200, 4)
        state = indexing.cluster_baseline(segments, 1.0)
        self.assertEqual(state.n_clusters, 4)
        self.assertEqual(state.merge_log, ())
        self.assertEqual(state.bic_evals, pair_count(4))

    def test_single(self):
        state = indexing.cluster_baseline(self.segments[:1], 1.0)
        self.assertEqual(state.assignment(), {0: 0})
        self.assertEqual(state.bic_evals, 0)

    def test_input_order(self):
        shuffled = list(self.segments)
        random.Random(1).shuffle(shuffled)
        first = indexing.cluster_baseline(self.segments, 1.0)
        second = indexing.cluster_baseline(shuffled, 1.0)
        self.assertEqual(first.merge_keys(), second.merge_keys())
        self.assertEqual(first.assignment(), second.assignment())


class TestClusterTwoStage(harness.TestCase):

    def setUp(self):
        self.segments, self.speakers = fixtures.speaker_segments(4, 3, 3, 200, 4)

    def test_speakers(self):
        state = indexing.cluster_two_stage(self.segments, TWO_STAGE)
        self.assertEqual(state.mode, models.ClusterMode.TWO_STAGE)
        self.assertEqual(state.lambda_, 1.0)
        self.assertEqual(state.assignment(), speaker_assignment(self.speakers))
        for cluster in state.clusters:
            self.assertIsNotNone(cluster.histogram)
            self.assertEqual(cluster.histogram.segment_id, cluster.cluster_id)

    def test_counters(self):
        state = indexing.cluster_two_stage(self.segments, TWO_STAGE)
        # One initial matrix, then one row per merge.
        rows = sum(i - 2 for i in range(4, 10))
        self.assertEqual(state.cosine_evals, pair_count(9) + rows)
        self.assertEqual(state.bic_evals, sum(pair_count(i) for i in range(3, 10)))
        self.assertFalse(state.fast_match_stopped)

    def test_matches_baseline(self):
        baseline = indexing.cluster_baseline(self.segments, 1.0)
        two_stage = indexing.cluster_two_stage(self.segments, TWO_STAGE.replace(n_best=pair_count(9)))
        self.assertEqual(two_stage.merge_keys(), baseline.merge_keys())
        self.assertEqual(baseline.assignment(), two_stage.assignment())
        self.assertEqual(baseline.bic_evals, two_stage.bic_evals)

    def test_shortlist(self):
        state = indexing.cluster_two_stage(self.segments, TWO_STAGE.replace(n_best=2))
        self.assertEqual(state.assignment(), speaker_assignment(self.speakers))
        # Six merges and a final check, each scoring two pairs.
        self.assertEqual(state.bic_evals, 14)
        self.assertTrue(state.fast_match_stopped)
        for record in state.merge_log:
            self.assertIn(record.cosine_rank, (0, 1))

    def test_evaluation_bound(self):
        for n_best in (1, 2, 5, 10):
            state = indexing.cluster_two_stage(self.segments, TWO_STAGE.replace(n_best=n_best))
            # Every iteration scores at most N pairs; the last one finds no merge.
            iterations = len(state.merge_log) + int(state.n_clusters > 1)
            self.assertLessEqual(state.bic_evals, iterations * n_best)

    def test_audit(self):
        config = TWO_STAGE.replace(n_best=2, audit_fast_match=True)
        audited = indexing.cluster_two_stage(self.segments, config)
        plain = indexing.cluster_two_stage(self.segments, config.replace(audit_fast_match=False))
        self.assertEqual(audited.audit_checks, 7)
        self.assertGreaterEqual(audited.audit_hits, 0)
        self.assertLessEqual(audited.audit_hits, 7)
        self.assertEqual(audited.bic_evals, plain.bic_evals)
        self.assertEqual(audited.merge_keys(), plain.merge_keys())
        self.assertIsNone(plain.audit_checks)

    def test_codebook(self):
        frames = np.vstack([i.frames for i in self.segments])
        cb = indexing.train_codebook(frames, 6, seed=1)
        state = indexing.cluster_two_stage(self.segments, TWO_STAGE, cb=cb)
        self.assertEqual(len(state.clusters[0].histogram), 6)

    def test_lambda_override(self):
        state = indexing.cluster_two_stage(self.segments, TWO_STAGE, lambda_=1e6)
        self.assertEqual(state.lambda_, 1e6)
        self.assertEqual(state.n_clusters, 1)

    def test_auto_lambda(self):
        config = TWO_STAGE.replace(lambda_=None)
        state = indexing.cluster_two_stage(self.segments, config)
        estimate = indexing.estimate_lambda(self.segments)
        self.assertEqual(state.lambda_, estimate.lambda_act)

    def test_deterministic(self):
        first = indexing.cluster_two_stage(self.segments, TWO_STAGE)
        second = indexing.cluster_two_stage(self.segments[::-1], TWO_STAGE)
        self.assertEqual(first, second)

    def test_single(self):
        state = indexing.cluster_two_stage(self.segments[:1], TWO_STAGE)
        self.assertEqual(state.assignment(), {0: 0})
        self.assertEqual((state.cosine_evals, state.bic_evals), (0, 0))

    def test_codebook_size(self):
        cb = indexing.train_segment_codebook(self.segments, TWO_STAGE)
        self.assertEqual(cb.size, indexing.default_codebook_size(9, 1800))
        cb = indexing.train_segment_codebook(self.segments, TWO_STAGE.replace(codebook_size=4, seed=3))
        self.assertEqual((cb.size, cb.train_seed), (4, 3))

    def test_codebook_size_distinct(self):
        rng = np.random.default_rng(6)
        points = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
        segments = [
            models.FeatureMatrix(points[rng.integers(4, size=100)], i)
            for i in range(12)
        ]
        with self.assertLogs('vqbic.indexing.clustering', 'INFO'):
            cb = indexing.train_segment_codebook(segments, TWO_STAGE)
        self.assertEqual(cb.size, 4)
        report = indexing.cluster(segments, TWO_STAGE)
        self.assertEqual(report.codebook_size, 4)
        self.assertEqual(report.state.mode, models.ClusterMode.TWO_STAGE)
        with self.assertRaises(errors.TooFewFramesError):
            indexing.train_segment_codebook(segments, TWO_STAGE.replace(codebook_size=12))


class TestCluster(harness.TestCase):

    def setUp(self):
        self.segments, self.speakers = fixtures.speaker_segments(5, 3, 3, 200, 4)

    def test_baseline(self):
        report = indexing.cluster(self.segments, BASELINE)
        self.assertEqual(report.state.mode, models.ClusterMode.BASELINE)
        self.assertIsNone(report.codebook_size)
        self.assertIsNone(report.threshold)
        self.assertGreater(report.wall_time, 0.0)
        self.assertEqual(report.config, BASELINE)
        self.assertEqual(report.to_record()['lambda_source'], 'fixed')

    def test_two_stage(self):
        report = indexing.cluster(self.segments, TWO_STAGE)
        self.assertEqual(report.codebook_size, indexing.default_codebook_size(9, 1800))
        self.assertEqual(report.state.assignment(), speaker_assignment(self.speakers))
        self.assertEqual(report.state, indexing.cluster_two_stage(self.segments, TWO_STAGE))

    def test_auto_lambda(self):
        report = indexing.cluster(self.segments, BASELINE.replace(lambda_=None))
        self.assertIsNotNone(report.threshold)
        self.assertEqual(report.state.lambda_, report.threshold.lambda_act)
        self.assertEqual(report.to_record()['lambda_source'], 'auto')

    def test_resolve_lambda(self):
        self.assertEqual(indexing.clustering.resolve_lambda(self.segments, TWO_STAGE), (1.0, None))

    def test_invalid(self):
        with self.assertRaises(errors.ValidationError):
            indexing.cluster([], TWO_STAGE)
